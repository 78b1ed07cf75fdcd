"""Command-line interface: exact tables, characters, verifications and fusion.

Every command prints deterministic output (JSON, CSV or plain text) built
from exact rationals; no floats anywhere.  Exit codes: 0 on success or a
passing verification, 1 when a verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction

from . import affine, coset, extension
from .minimal import KacLabel, MinimalModel, kac_table_csv

DEFAULT_ORDER = 20
DEFAULT_MAX_ORDER = 200


class UsageError(Exception):
    pass


def _rat(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _common_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--order", type=int, default=DEFAULT_ORDER,
                     help="number of coefficient levels beyond the leading term")
    sub.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sub.add_argument("--output", metavar="PATH", help="write to a file instead of stdout")
    sub.add_argument("--max-order", type=int, default=DEFAULT_MAX_ORDER,
                     help="refuse orders above this cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cosetchar",
        description="exact q-series characters and fusion data for minimal models "
                    "and affine osp(1|2)",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("kac-table", help="conformal weight grid of a minimal model")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    _common_flags(p)

    p = subs.add_parser("char", help="q-expansion of an irreducible character")
    p.add_argument("kind", choices=("vir", "osp", "sl2"))
    p.add_argument("--p", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--level", type=int)
    p.add_argument("--i", type=int)
    _common_flags(p)

    p = subs.add_parser("verify", help="run a coefficientwise verification")
    p.add_argument(
        "which",
        choices=("central-charge", "decomposition", "even-refinement",
                 "singular-ladder", "all"),
    )
    p.add_argument("--perturb", metavar="ROW:COL:DELTA",
                   help="test mode: shift one summand coefficient before comparing")
    _common_flags(p)

    p = subs.add_parser("fusion", help="fusion products and tables")
    p.add_argument("scope", choices=("vir", "ext"))
    p.add_argument("p", type=int, nargs="?")
    p.add_argument("q", type=int, nargs="?")
    p.add_argument("--a", metavar="R,S", help="first label")
    p.add_argument("--b", metavar="R,S", help="second label")
    p.add_argument("--table", action="store_true", help="full fusion table")
    _common_flags(p)

    p = subs.add_parser("classify", help="orbit and fixed-point census of the extension")
    _common_flags(p)

    p = subs.add_parser("weights", help="branching weights and lowest spaces")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--r", type=int, help="restrict to one module")
    _common_flags(p)

    p = subs.add_parser("singular", help="singular-vector weight ladder")
    p.add_argument("--alpha", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--t", metavar="NUM/DEN", help="evaluate one weight at this t")
    _common_flags(p)

    return parser


# -- per-command renderers -----------------------------------------------------


def _parse_label(text: str) -> KacLabel:
    try:
        r, s = (int(x) for x in text.split(","))
    except Exception:
        raise UsageError(f"label {text!r} is not of the form R,S") from None
    return KacLabel(r, s)


def _series_output(series, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(series.to_json_dict())
    if fmt == "csv":
        lines = ["exponent,coefficient"]
        for e, c in series.nonzero_terms():
            lines.append(f"{_rat(e)},{_rat(c)}")
        return "\n".join(lines) + "\n"
    lines = [f"{_rat(c)} * q^({_rat(e)})" for e, c in series.nonzero_terms()]
    lines.append(f"exact below q^({_rat(series.order_exponent)})")
    return "\n".join(lines) + "\n"


def cmd_kac_table(args) -> tuple[str, int]:
    model = MinimalModel(args.p, args.q)
    if args.format == "csv":
        return kac_table_csv(model), 0
    table = model.kac_table()
    if args.format == "json":
        payload = {
            "p": model.p,
            "q": model.q,
            "central_charge": _rat(model.central_charge()),
            "rows": [[_rat(w) for w in row] for row in table],
        }
        return json.dumps(payload), 0
    width = max(len(_rat(w)) for row in table for w in row)
    lines = []
    for r, row in enumerate(table, start=1):
        cells = " ".join(_rat(w).rjust(width) for w in row)
        lines.append(f"r={r}: {cells}")
    return "\n".join(lines) + "\n", 0


def cmd_char(args) -> tuple[str, int]:
    order = args.order
    if args.kind == "vir":
        if None in (args.p, args.q, args.r, args.s):
            raise UsageError("char vir needs --p --q --r --s")
        series = MinimalModel(args.p, args.q).character(KacLabel(args.r, args.s), order)
    elif args.kind == "osp":
        if None in (args.level, args.r):
            raise UsageError("char osp needs --level and --r")
        series = affine.osp_character(affine.OspLabel(args.level, args.r), order)
    else:
        if None in (args.level, args.i):
            raise UsageError("char sl2 needs --level and --i")
        series = affine.sl2_character(affine.Sl2Label(args.level, args.i), order)
    # internal margins may have carried the series further; show the window asked for
    top = series.leading_term()[0] + order
    series = series.truncate(Fraction(int(top * series.den) + 1, series.den))
    return _series_output(series, args.format), 0


def _parse_perturb(text: str) -> tuple[int, int, int]:
    try:
        row, col, delta = (int(x) for x in text.split(":"))
    except Exception:
        raise UsageError(f"--perturb {text!r} is not ROW:COL:DELTA") from None
    return row, col, delta


def cmd_verify(args) -> tuple[str, int]:
    perturb = _parse_perturb(args.perturb) if args.perturb else None
    if perturb and args.which not in ("decomposition", "all"):
        raise UsageError("--perturb only applies to the decomposition check")
    if args.which == "central-charge":
        reports = [coset.verify_central_charge()]
    elif args.which == "decomposition":
        reports = [coset.verify_decomposition(args.order, perturb)]
    elif args.which == "even-refinement":
        reports = [coset.verify_even_refinement(min(args.order, coset.MAX_REFINEMENT_ORDER))]
    elif args.which == "singular-ladder":
        reports = [coset.singular_ladder(args.order)]
    else:
        reports = [
            coset.verify_central_charge(),
            coset.verify_decomposition(args.order, perturb),
            coset.verify_even_refinement(min(args.order, coset.MAX_REFINEMENT_ORDER)),
            coset.singular_ladder(args.order),
        ]
    passed = all(r.passed for r in reports)
    if args.format == "json":
        dicts = [r.to_json_dict() for r in reports]
        text = json.dumps(dicts[0] if len(dicts) == 1 else dicts)
    elif args.format == "csv":
        text = "\n".join(r.to_csv() for r in reports)
    else:
        lines = []
        for r in reports:
            lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.check} (order {r.order})")
            for note in r.notes:
                lines.append(f"  note: {note}")
        text = "\n".join(lines) + "\n"
    if not passed:
        for r in reports:
            bad = r.first_mismatch()
            if bad is not None:
                print(
                    f"{r.check}: first mismatch at q^({_rat(bad.exponent)}): "
                    f"{_rat(bad.lhs)} != {_rat(bad.rhs)}",
                    file=sys.stderr,
                )
    return text, 0 if passed else 1


def cmd_fusion(args) -> tuple[str, int]:
    if args.scope == "vir":
        if args.p is None or args.q is None:
            raise UsageError("fusion vir needs positional P Q")
        model = MinimalModel(args.p, args.q)
        if args.table:
            labels = model.canonical_labels()
            entries = [
                {
                    "a": [a.r, a.s],
                    "b": [b.r, b.s],
                    "result": model.fuse(a, b).to_json(),
                }
                for a in labels
                for b in labels
            ]
            return _fusion_output(entries, args.format), 0
        if not (args.a and args.b):
            raise UsageError("fusion vir needs --a and --b (or --table)")
        a, b = _parse_label(args.a), _parse_label(args.b)
        entries = [{"a": [a.r, a.s], "b": [b.r, b.s], "result": model.fuse(a, b).to_json()}]
        return _fusion_output(entries, args.format), 0
    if args.table:
        return _fusion_output(extension.fusion_table(), args.format), 0
    if not (args.a and args.b):
        raise UsageError("fusion ext needs --a and --b (or --table)")
    la, lb = _parse_label(args.a), _parse_label(args.b)
    a = extension.ext_label(la.r, la.s)
    b = extension.ext_label(lb.r, lb.s)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", extension.FixedPointFusionWarning)
        result = extension.ext_fuse(a, b)
    entries = [{"a": [a.r, a.s], "b": [b.r, b.s], "result": result.to_json()}]
    return _fusion_output(entries, args.format), 0


def _fusion_output(entries: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(entries)
    if fmt == "csv":
        lines = ["a_r,a_s,b_r,b_s,r,s,mult"]
        for e in entries:
            for term in e["result"]:
                lines.append(
                    f"{e['a'][0]},{e['a'][1]},{e['b'][0]},{e['b'][1]},"
                    f"{term['r']},{term['s']},{term['mult']}"
                )
        return "\n".join(lines) + "\n"
    lines = []
    for e in entries:
        rhs = " + ".join(
            (f"{t['mult']}*" if t["mult"] != 1 else "") + f"({t['r']},{t['s']})"
            for t in e["result"]
        )
        lines.append(f"({e['a'][0]},{e['a'][1]}) x ({e['b'][0]},{e['b'][1]}) = {rhs or '0'}")
    return "\n".join(lines) + "\n"


def cmd_classify(args) -> tuple[str, int]:
    orbits, fixed = extension.classify_ext_modules()
    payload = {
        "orbits": [
            {
                "r": o.r,
                "s": o.s,
                "constituents": [[c.r, c.s] for c in o.constituents],
            }
            for o in orbits
        ],
        "fixed_points": [[f.r, f.s] for f in fixed],
        "counts": {"orbits": len(orbits), "fixed": len(fixed),
                   "total_labels": 2 * len(orbits) + len(fixed)},
    }
    if args.format == "json":
        return json.dumps(payload), 0
    if args.format == "csv":
        lines = ["kind,r,s"]
        lines += [f"orbit,{o.r},{o.s}" for o in orbits]
        lines += [f"fixed,{f.r},{f.s}" for f in fixed]
        return "\n".join(lines) + "\n", 0
    lines = [f"orbit modules ({len(orbits)}):"]
    lines += [f"  Ext({o.r},{o.s}) = V{o.constituents[0]} + V{o.constituents[1]}" for o in orbits]
    lines.append(f"fixed points ({len(fixed)}), two structures each:")
    lines += [f"  V({f.r},{f.s})" for f in fixed]
    return "\n".join(lines) + "\n", 0


def cmd_weights(args) -> tuple[str, int]:
    level = args.level
    rs = [args.r] if args.r is not None else [m.r for m in affine.osp_modules(level)]
    payload = []
    for r in rs:
        terms = affine.branch_terms(level, r)
        w, dim = affine.lowest_space(level, r)
        payload.append(
            {
                "level": level,
                "r": r,
                "terms": [t.to_json() for t in terms],
                "lowest_weight": _rat(w),
                "lowest_dimension": dim,
            }
        )
    if args.format == "json":
        return json.dumps(payload), 0
    if args.format == "csv":
        lines = ["level,r,i,vir_r,vir_s,parity,weight"]
        for entry in payload:
            for t in entry["terms"]:
                lines.append(
                    f"{entry['level']},{entry['r']},{t['sl2']['i']},"
                    f"{t['vir']['r']},{t['vir']['s']},{t['parity']},{t['weight']}"
                )
        return "\n".join(lines) + "\n", 0
    lines = []
    for entry in payload:
        lines.append(
            f"M_{entry['r']} at level {entry['level']}: lowest weight "
            f"{entry['lowest_weight']} with dimension {entry['lowest_dimension']}"
        )
        for t in entry["terms"]:
            lines.append(
                f"  L({entry['level']},{t['sl2']['i']}) x V({t['vir']['r']},{t['vir']['s']})"
                f" [{t['parity']}] weight {t['weight']}"
            )
    return "\n".join(lines) + "\n", 0


def cmd_singular(args) -> tuple[str, int]:
    if args.t is not None or args.alpha is not None or args.beta is not None:
        if None in (args.alpha, args.beta, args.t):
            raise UsageError("direct evaluation needs --alpha, --beta and --t")
        try:
            t = Fraction(args.t)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--t {args.t!r} is not a rational") from None
        value = affine.h_alpha_beta(args.alpha, args.beta, t)
        if args.format == "json":
            return json.dumps({"alpha": args.alpha, "beta": args.beta,
                               "t": _rat(t), "value": _rat(value)}), 0
        return f"{_rat(value)}\n", 0
    report = coset.singular_ladder(args.order)
    if args.format == "json":
        return report.dumps(), 0
    if args.format == "csv":
        return report.to_csv(), 0
    lines = [f"{'PASS' if report.passed else 'FAIL'} singular-ladder (order {report.order})"]
    for label, (w1, w2) in report.rows:
        lines.append(f"  {label}: {_rat(w1)}, {_rat(w2)}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines) + "\n", 0 if report.passed else 1


_DISPATCH = {
    "kac-table": cmd_kac_table,
    "char": cmd_char,
    "verify": cmd_verify,
    "fusion": cmd_fusion,
    "classify": cmd_classify,
    "weights": cmd_weights,
    "singular": cmd_singular,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    order = getattr(args, "order", 0)
    cap = getattr(args, "max_order", DEFAULT_MAX_ORDER)
    if order < 0 or order > cap:
        print(f"error: order must lie in 0..{cap}", file=sys.stderr)
        return 2
    try:
        text, code = _DISPATCH[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
