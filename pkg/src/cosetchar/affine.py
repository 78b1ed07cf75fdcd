"""Specialized characters of affine osp(1|2) and sl2 modules, and their branching.

Level-l affine osp(1|2) has l+1 irreducible modules M_r, r = 1, 3, ..., 2l+1,
each splitting into an even and an odd part.  Both parts branch over
affine sl2 at level l times the (2l+3, l+2) Virasoro minimal model:

    even part of M_r  =  sum over even i of  L(l,i) (x) V_{i+1,r}
    odd  part of M_r  =  sum over odd  i of  L(l,i) (x) V_{i+1,r}

All characters here are single-variable graded dimensions Tr q^(L0 - c/24).
The osp(1|2) character is a weighted theta sum times prod(1+q^n)^2 over
q^(1/24) prod(1-q^n)^3; the specialized affine sl2 character is the
Weyl-Kac numerator sum_m (2(l+2)m + i+1) q^((l+2)(m + (i+1)/(2(l+2)))^2)
over q^(1/8) prod(1-q^n)^3.  The two routes are tied together by the
branching identity, which the test suite checks coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .minimal import KacLabel, MinimalModel
from .series import FracSeries, euler_product, monomial, weighted_theta

__all__ = [
    "OspLabel",
    "Sl2Label",
    "BranchTerm",
    "osp_central_charge",
    "osp_modules",
    "osp_character",
    "sl2_central_charge",
    "sl2_weight",
    "sl2_character",
    "branch_model",
    "branch_terms",
    "branch_weight",
    "branch_character",
    "lowest_space",
    "h_alpha_beta",
    "singular_weights",
]

Parity = Literal["even", "odd", "both"]


@dataclass(frozen=True)
class OspLabel:
    """Irreducible module M_r of affine osp(1|2) at level l; r odd, 1 <= r <= 2l+1."""

    l: int
    r: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("level must be a positive integer")
        if self.r % 2 == 0 or not 1 <= self.r <= 2 * self.l + 1:
            raise ValueError(f"r must be odd in 1..{2 * self.l + 1}, got {self.r}")


@dataclass(frozen=True)
class Sl2Label:
    """Irreducible module L(l, i) of affine sl2 at level l; 0 <= i <= l."""

    l: int
    i: int

    def __post_init__(self):
        if self.l < 1:
            raise ValueError("level must be a positive integer")
        if not 0 <= self.i <= self.l:
            raise ValueError(f"i must lie in 0..{self.l}, got {self.i}")


@dataclass(frozen=True)
class BranchTerm:
    """One summand L(l,i) (x) V_{i+1,r} of a branching decomposition."""

    sl2: Sl2Label
    vir: KacLabel
    parity: str

    def __post_init__(self):
        if self.vir.r != self.sl2.i + 1:
            raise ValueError("Virasoro row index must be i+1")
        if self.parity != ("even" if self.sl2.i % 2 == 0 else "odd"):
            raise ValueError("parity must match the parity of i")

    @property
    def weight(self) -> Fraction:
        return branch_weight(self.sl2.l, self.sl2.i, self.vir.s)

    def to_json(self) -> dict:
        w = self.weight
        return {
            "sl2": {"level": self.sl2.l, "i": self.sl2.i},
            "vir": {"r": self.vir.r, "s": self.vir.s},
            "parity": self.parity,
            "weight": f"{w.numerator}/{w.denominator}",
        }


def osp_central_charge(l: int) -> Fraction:
    if l < 1:
        raise ValueError("level must be a positive integer")
    return Fraction(2 * l, 2 * l + 3)


def osp_modules(l: int) -> list[OspLabel]:
    return [OspLabel(l, r) for r in range(1, 2 * l + 2, 2)]


def osp_weight(l: int, r: int) -> Fraction:
    """Conformal weight of the lowest space of M_r."""
    OspLabel(l, r)
    return Fraction(r * r - 1, 8 * (2 * l + 3))


def osp_character(lab: OspLabel, order: int = 20) -> FracSeries:
    """Character of M_r, exact at least through q^(h - c/24 + order).

    Weighted theta sum over the super denominator:
    sum_m (2am+r) q^((a/2)(m + r/(2a))^2) * prod(1+q^n)^2
    / (q^(1/24) prod(1-q^n)^3), with a = 2l+3.
    """
    a = 2 * lab.l + 3
    e0 = osp_weight(lab.l, lab.r) - osp_central_charge(lab.l) / 24
    return _assemble(
        theta=weighted_theta(2 * a, lab.r, Fraction(a, 2), _ceil(e0 + order + Fraction(1, 24)) + 2),
        euler_parts=((1, 2), (-1, -3)),
        eta_den=24,
        order=order,
        target=e0 + order,
    )


def sl2_central_charge(l: int) -> Fraction:
    if l < 1:
        raise ValueError("level must be a positive integer")
    return Fraction(3 * l, l + 2)


def sl2_weight(lab: Sl2Label) -> Fraction:
    return Fraction(lab.i * (lab.i + 2), 4 * (lab.l + 2))


def sl2_character(lab: Sl2Label, order: int = 20) -> FracSeries:
    """Specialized character of L(l, i); leading term (i+1) q^(h_i - c/24)."""
    k = lab.l + 2
    e0 = sl2_weight(lab) - sl2_central_charge(lab.l) / 24
    return _assemble(
        theta=weighted_theta(2 * k, lab.i + 1, Fraction(k), _ceil(e0 + order + Fraction(1, 8)) + 2),
        euler_parts=((-1, -3),),
        eta_den=8,
        order=order,
        target=e0 + order,
    )


def _assemble(theta, euler_parts, eta_den, order, target):
    out = theta
    n = order + 2
    for sign, e in euler_parts:
        out = out * euler_product(sign, e, n)
    span = out.order - out.lowest
    out = out * monomial(1, -1, eta_den, eta_den * span // out.den + eta_den + 1)
    assert out.order_exponent > target, "internal truncation bookkeeping error"
    return out


def branch_model(l: int) -> MinimalModel:
    """Virasoro model appearing next to level-l sl2 in the branching."""
    return MinimalModel(2 * l + 3, l + 2)


def branch_terms(l: int, r: int, parity: Parity = "both") -> list[BranchTerm]:
    OspLabel(l, r)
    model = branch_model(l)
    out = []
    for i in range(0, l + 1):
        par = "even" if i % 2 == 0 else "odd"
        if parity != "both" and par != parity:
            continue
        lab = KacLabel(i + 1, r)
        if not model.in_range(lab):
            raise ValueError(f"branch label {lab} out of range for {model}")
        out.append(BranchTerm(Sl2Label(l, i), lab, par))
    return out


def branch_weight(l: int, i: int, r: int) -> Fraction:
    """Conformal weight of L(l,i) (x) V_{i+1,r}."""
    Sl2Label(l, i)
    OspLabel(l, r)
    return Fraction(
        2 * (i + 1) ** 2 - 2 * (i + 1) * r, 4
    ) + Fraction((l + 2) * (r * r - 1), 4 * (2 * l + 3))


def branch_character(l: int, r: int, parity: Parity = "both", order: int = 20) -> FracSeries:
    """Sum of sl2 x Virasoro products over branch terms of the given parity.

    With parity "both" this recomputes the full M_r character along the
    branching route, independently of osp_character's closed form.
    """
    model = branch_model(l)
    total = None
    for term in branch_terms(l, r, parity):
        piece = sl2_character(term.sl2, order + 1) * model.character(term.vir, order + 1)
        total = piece if total is None else total + piece
    if total is None:
        raise ValueError(f"no branch terms of parity {parity!r}")
    target = osp_weight(l, r) - osp_central_charge(l) / 24 + order
    assert total.order_exponent > target, "internal truncation bookkeeping error"
    return total


def lowest_space(l: int, r: int) -> tuple[Fraction, int]:
    """(weight, dimension) of the lowest graded piece of M_r.

    The weight is the minimum branch weight; the dimension adds up the sl2
    lowest-space dimensions i+1 over the minimizing branch terms.
    """
    weights = {i: branch_weight(l, i, r) for i in range(l + 1)}
    w = min(weights.values())
    dim = sum(i + 1 for i, wi in weights.items() if wi == w)
    return w, dim


def h_alpha_beta(alpha: int, beta: int, t: Fraction) -> Fraction:
    """(1/4)(a^2-1)t - (1/2)(ab-1) + (1/4)(b^2-1)/t."""
    t = Fraction(t)
    if t == 0:
        raise ValueError("t must be nonzero")
    return (
        Fraction(alpha * alpha - 1, 4) * t
        - Fraction(alpha * beta - 1, 2)
        + Fraction(beta * beta - 1, 4) / t
    )


def singular_weights(model: MinimalModel, label: KacLabel) -> tuple[Fraction, Fraction]:
    """Weights of the two singular vectors over the Verma module of the label.

    Evaluated at t = p/q: the pair (h_{r,-s}(t), h_{r-2q,-s}(t)).
    """
    if not model.in_range(label):
        raise ValueError(f"label {label} out of range")
    t = Fraction(model.p, model.q)
    return (
        h_alpha_beta(label.r, -label.s, t),
        h_alpha_beta(label.r - 2 * model.q, -label.s, t),
    )


def _ceil(x: Fraction) -> int:
    x = Fraction(x)
    return -((-x.numerator) // x.denominator)
