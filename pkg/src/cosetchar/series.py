"""Exact truncated formal series in a fractional power of q.

A :class:`FracSeries` stores the coefficients of ``q**((lowest+k)/den)`` for
``k = 0 .. len(coeffs)-1`` as arbitrary-precision rationals.  Every operation
tracks the largest exponent bound below which its result is still exact, so a
coefficient can never silently degrade into garbage: asking for one at or
beyond the bound raises instead of returning zero.

The module also provides the handful of special series every character in
this package is assembled from: plain monomial prefactors, Euler products
``prod (1 +- q^n)^e``, theta null sums ``sum_m q^(a(m+b/2a)^2)`` and their
linearly weighted variants ``sum_m (Am+b) q^(c(m+b/A)^2)``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Iterable, Iterator

__all__ = [
    "FracSeries",
    "monomial",
    "euler_product",
    "theta_null",
    "weighted_theta",
    "series_from_terms",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class FracSeries:
    """Truncated series ``sum_k coeffs[k] * q**((lowest+k)/den)``.

    Exact for every exponent strictly below ``order/den`` where
    ``order == lowest + len(coeffs)``; nothing is known at or beyond that
    bound.  Exponents strictly below ``lowest/den`` are exactly zero.
    Instances are immutable; all arithmetic returns new objects.
    """

    __slots__ = ("den", "lowest", "coeffs")

    def __init__(self, den: int, lowest: int, coeffs: Iterable[Fraction | int]):
        if den < 1:
            raise ValueError(f"denominator must be >= 1, got {den}")
        self.den = int(den)
        self.lowest = int(lowest)
        self.coeffs = tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coeffs)

    @property
    def order(self) -> int:
        """Scaled exponent bound: exact strictly below ``order/den``."""
        return self.lowest + len(self.coeffs)

    @property
    def order_exponent(self) -> Fraction:
        return Fraction(self.order, self.den)

    # -- inspection ------------------------------------------------------

    def exponent(self, k: int) -> Fraction:
        """Exponent of the k-th stored coefficient."""
        return Fraction(self.lowest + k, self.den)

    def nonzero_terms(self) -> Iterator[tuple[Fraction, Fraction]]:
        """Yield (exponent, coefficient) for every nonzero stored term."""
        for k, c in enumerate(self.coeffs):
            if c:
                yield Fraction(self.lowest + k, self.den), c

    def leading_term(self) -> tuple[Fraction, Fraction] | None:
        """First nonzero (exponent, coefficient), or None for a zero series."""
        for term in self.nonzero_terms():
            return term
        return None

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def coeff(self, num: int | Fraction, den: int = 1) -> Fraction:
        """Exact coefficient of ``q**(num/den)``.

        Zero when the exponent is below the truncation bound but not on the
        series' exponent lattice.  Raises ValueError at or beyond the bound;
        an unknown coefficient is never reported as zero.
        """
        e = Fraction(num, den) if not isinstance(num, Fraction) else num / den
        if e >= self.order_exponent:
            raise ValueError(
                f"coefficient of q^{e} requested, but series is only exact "
                f"below q^{self.order_exponent}"
            )
        scaled = e * self.den
        if scaled.denominator != 1:
            return _ZERO
        k = int(scaled) - self.lowest
        if k < 0:
            return _ZERO
        return self.coeffs[k]

    # -- representation changes -----------------------------------------

    def rescale(self, new_den: int) -> "FracSeries":
        """Re-express on the finer lattice ``(1/new_den)Z``; must refine den."""
        if new_den % self.den:
            raise ValueError(f"{new_den} is not a multiple of denominator {self.den}")
        f = new_den // self.den
        if f == 1:
            return self
        coeffs = [_ZERO] * (len(self.coeffs) * f)
        for k, c in enumerate(self.coeffs):
            coeffs[k * f] = c
        # exactness bound carries over: old order/den == new order/new_den
        return FracSeries(new_den, self.lowest * f, coeffs)

    def reduced(self) -> "FracSeries":
        """Equivalent series on the coarsest lattice holding all nonzero terms."""
        if self.den == 1:
            return self
        g = 0
        for k, c in enumerate(self.coeffs):
            if c:
                g = gcd(g, self.lowest + k)
        # d must divide order as well, otherwise the coarser lattice would
        # either drop a known slot or claim exactness past the true bound
        d = gcd(g, self.den, self.order)
        if d == 1:
            return self
        new_den = self.den // d
        hi = self.order // d
        lo = min(-(-self.lowest // d), hi)
        coeffs = [_ZERO] * (hi - lo)
        for k, c in enumerate(self.coeffs):
            if c:
                coeffs[(self.lowest + k) // d - lo] = c
        return FracSeries(new_den, lo, coeffs)

    def truncate(self, bound: Fraction | int) -> "FracSeries":
        """Drop knowledge at exponents >= bound (bound must not exceed order)."""
        b = Fraction(bound)
        if b > self.order_exponent:
            raise ValueError("cannot truncate beyond the exactness bound")
        scaled = b * self.den
        new_order = -(-scaled.numerator // scaled.denominator)  # ceil
        keep = max(new_order - self.lowest, 0)
        return FracSeries(self.den, min(self.lowest, new_order), self.coeffs[:keep])

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "FracSeries") -> "FracSeries":
        if not isinstance(other, FracSeries):
            return NotImplemented
        d = lcm(self.den, other.den)
        a, b = self.rescale(d), other.rescale(d)
        order = min(a.order, b.order)
        lowest = min(a.lowest, b.lowest, order)
        coeffs = [_ZERO] * (order - lowest)
        for k, c in enumerate(a.coeffs):
            pos = a.lowest + k
            if c and pos < order:
                coeffs[pos - lowest] += c
        for k, c in enumerate(b.coeffs):
            pos = b.lowest + k
            if c and pos < order:
                coeffs[pos - lowest] += c
        return FracSeries(d, lowest, coeffs)

    def __neg__(self) -> "FracSeries":
        return FracSeries(self.den, self.lowest, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "FracSeries") -> "FracSeries":
        if not isinstance(other, FracSeries):
            return NotImplemented
        return self + (-other)

    def scaled(self, factor: Fraction | int) -> "FracSeries":
        """Multiply every coefficient by an exact scalar."""
        f = Fraction(factor)
        return FracSeries(self.den, self.lowest, tuple(c * f for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if not isinstance(other, FracSeries):
            return NotImplemented
        d = lcm(self.den, other.den)
        a, b = self.rescale(d), other.rescale(d)
        ta = [(a.lowest + k, c) for k, c in enumerate(a.coeffs) if c]
        tb = [(b.lowest + k, c) for k, c in enumerate(b.coeffs) if c]
        # First possibly-nonzero exponent of each factor; with no nonzero term
        # stored that is the truncation bound itself.
        lo_a = ta[0][0] if ta else a.order
        lo_b = tb[0][0] if tb else b.order
        # Unknown tail of one factor first pollutes the product at
        # order_a + lo_b (resp. order_b + lo_a); below that every Cauchy
        # convolution term is made of known coefficients.
        order = min(a.order + lo_b, b.order + lo_a)
        lowest = min(lo_a + lo_b, order)
        coeffs = [_ZERO] * (order - lowest)
        for i, ca in ta:
            for j, cb in tb:
                pos = i + j
                if pos < order:
                    coeffs[pos - lowest] += ca * cb
        return FracSeries(d, lowest, coeffs)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "FracSeries":
        if not isinstance(n, int) or n < 1:
            raise ValueError("only positive integer powers are supported")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        """Equal iff all coefficients match on the common known region."""
        if not isinstance(other, FracSeries):
            return NotImplemented
        d = lcm(self.den, other.den)
        a, b = self.rescale(d), other.rescale(d)
        order = min(a.order, b.order)
        lo = min(a.lowest, b.lowest)
        for pos in range(lo, order):
            ca = a.coeffs[pos - a.lowest] if a.lowest <= pos < a.order else _ZERO
            cb = b.coeffs[pos - b.lowest] if b.lowest <= pos < b.order else _ZERO
            if ca != cb:
                return False
        return True

    __hash__ = None  # overlap equality is not hash-compatible

    # -- serialization ---------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "denominator": self.den,
            "lowest": self.lowest,
            "coeffs": [f"{c.numerator}/{c.denominator}" for c in self.coeffs],
            "order": self.order,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "FracSeries":
        den = int(d["denominator"])
        lowest = int(d["lowest"])
        coeffs = [Fraction(s) for s in d["coeffs"]]
        order = int(d["order"])
        if order < lowest + len(coeffs):
            raise ValueError("order field below the stored coefficient range")
        coeffs.extend([_ZERO] * (order - lowest - len(coeffs)))
        return cls(den, lowest, coeffs)

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def loads(cls, s: str) -> "FracSeries":
        return cls.from_json_dict(json.loads(s))

    def __repr__(self) -> str:
        parts = []
        for e, c in self.nonzero_terms():
            parts.append(f"{c}*q^({e})")
            if len(parts) == 6:
                parts.append("...")
                break
        body = " + ".join(parts) if parts else "0"
        return f"<FracSeries {body} exact below q^({self.order_exponent})>"


def series_from_terms(
    terms: Iterable[tuple[Fraction, Fraction]], bound: Fraction | int
) -> FracSeries:
    """Build a series from (exponent, coefficient) pairs, exact below bound.

    The lattice denominator is the lcm of the exponent denominators and the
    bound's, so every term sits on an integer slot.
    """
    bound = Fraction(bound)
    kept = [(Fraction(e), Fraction(c)) for e, c in terms if Fraction(e) < bound]
    d = 1
    for e, _ in kept:
        d = lcm(d, e.denominator)
    d = lcm(d, bound.denominator)
    order = int(bound * d)
    lowest = min((int(e * d) for e, _ in kept), default=order)
    coeffs = [_ZERO] * (order - lowest)
    for e, c in kept:
        coeffs[int(e * d) - lowest] += c
    return FracSeries(d, lowest, coeffs).reduced()


def monomial(c: Fraction | int, num: int, den: int, order_terms: int) -> FracSeries:
    """Single term ``c * q**(num/den)`` with order_terms retained slots."""
    if den < 1:
        raise ValueError("den must be >= 1")
    if order_terms < 1:
        raise ValueError("order_terms must be >= 1")
    coeffs = [_ZERO] * order_terms
    coeffs[0] = Fraction(c)
    return FracSeries(den, num, coeffs)


def _binom(e: int, k: int) -> int:
    """Generalized binomial C(e, k) for integer e (possibly negative)."""
    if e >= 0:
        return comb(e, k) if k <= e else 0
    return (-1) ** k * comb(-e + k - 1, k)


def euler_product(sign: int, exponent: int, n_terms: int) -> FracSeries:
    """``prod_{n=1..N} (1 + sign*q^n)**exponent`` exact through q^N.

    sign is +1 or -1.  Factors beyond N only touch exponents > N, so the
    retained coefficients 0..N are the coefficients of the full infinite
    product.  Negative exponents expand each factor as a generalized
    binomial series.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    n = n_terms
    acc = [0] * (n + 1)
    acc[0] = 1
    for m in range(1, n + 1):
        # factor (1 + sign*q^m)^exponent truncated at q^n
        factor = [(_k, _binom(exponent, _k) * sign**_k) for _k in range(n // m + 1)]
        new = [0] * (n + 1)
        for pos, c in enumerate(acc):
            if not c:
                continue
            for k, b in factor:
                p = pos + k * m
                if p <= n:
                    new[p] += c * b
        acc = new
    return FracSeries(1, 0, acc)


def _quadratic_terms(coeff_of_m, exponent_of_m, bound: Fraction):
    """All (exponent, weight) with exponent < bound for a quadratic exponent.

    exponent_of_m(m) must be a convex quadratic; m is scanned outwards in
    both directions from 0 until the exponent leaves the bound, which never
    skips an admissible m.
    """
    out = []
    for step in (1, -1):
        m = 0 if step == 1 else -1
        while True:
            e = exponent_of_m(m)
            if e >= bound:
                # past the vertex the exponent only grows; before it, keep going
                if (step == 1 and exponent_of_m(m + 1) >= e) or (
                    step == -1 and exponent_of_m(m - 1) >= e
                ):
                    break
            else:
                out.append((e, coeff_of_m(m)))
            m += step
    return out


def theta_null(a: int, b: int, order: int) -> FracSeries:
    """``sum_{m in Z} q**(a*(m + b/(2a))**2)`` exact below exponent order.

    Exponents are (2am+b)^2/(4a), so the lattice denominator divides 4a.
    Symmetric under b -> -b.
    """
    if a < 1:
        raise ValueError("a must be >= 1")
    if order < 1:
        raise ValueError("order must be >= 1")
    bound = Fraction(order)
    terms = _quadratic_terms(
        lambda m: _ONE,
        lambda m: Fraction((2 * a * m + b) ** 2, 4 * a),
        bound,
    )
    return series_from_terms(terms, bound)


def weighted_theta(a: int, b: int, c: Fraction | int, order: int) -> FracSeries:
    """``sum_{m in Z} (a*m + b) * q**(c*(m + b/a)**2)`` exact below order."""
    if a < 1:
        raise ValueError("a must be >= 1")
    c = Fraction(c)
    if c <= 0:
        raise ValueError("c must be positive")
    if order < 1:
        raise ValueError("order must be >= 1")
    bound = Fraction(order)
    terms = _quadratic_terms(
        lambda m: Fraction(a * m + b),
        lambda m: c * (a * m + b) ** 2 / a**2,
        bound,
    )
    return series_from_terms(terms, bound)
