"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error (invalid complex, failed
validation), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .bounds import diagonal_width, genus_report
from .catalog import CATALOG_NAMES
from .complexes import InvalidComplexError
from .exact import NEG_INF, POS_INF, DomainError, PLFunction, as_rational, format_rational
from .expr import ExprParseError, parse_and_build
from .textio import ComplexParseError, serialize_complex
from .upsilon import delta_upsilon_prime, pivot_points, upsilon
from .upsilon2 import upsilon2, upsilon2_scalar, z_sets

MIRROR_NOTE = (
    "the one-sided minimizing cycle sets intersect, so the secondary invariant "
    "is +inf under the strict minimum-over-disjoint-pairs convention; treatments "
    "that assign such mirrors the value 0 would report 0 here"
)


def pl_to_json(f: PLFunction) -> dict:
    if not f.is_finite:
        return {"breakpoints": [], "infinite": "+inf" if f.infinite_value == POS_INF else "-inf"}
    return {
        "breakpoints": [{"x": format_rational(x), "y": format_rational(y)} for x, y in f.breakpoints],
        "infinite": "none",
    }


def pl_to_text(f: PLFunction, var: str = "t") -> str:
    if not f.is_finite:
        return "+inf everywhere" if f.infinite_value == POS_INF else "-inf everywhere"
    lines = []
    pts = f.breakpoints
    for (x0, y0), (x1, y1) in zip(pts, pts[1:]):
        slope = (y1 - y0) / (x1 - x0)
        intercept = y0 - slope * x0
        if slope == 0:
            formula = f"{y0}"
        elif intercept == 0:
            formula = f"{slope}*{var}"
        else:
            formula = f"{slope}*{var} {'+' if intercept > 0 else '-'} {abs(intercept)}"
        lines.append(f"  on [{x0}, {x1}]: {formula}")
    return "\n".join(lines)


def write_csv(f: PLFunction, path: str, samples: int) -> None:
    if samples < 2:
        raise DomainError("need at least 2 samples")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("x,y\n")
        for k in range(samples):
            x = Fraction(2 * k, samples - 1)
            y = f.evaluate(x)
            fh.write(f"{float(x)},{float(y)}\n")


def _rational_arg(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r} ({exc})") from None


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upsilonkit",
        description="Exact Upsilon and secondary Upsilon invariants of formal knot Floer complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, needs_t=False, t_list=False, pl_output=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("expr", help="complex expression, e.g. 'T(3,4)' or 'stair[2,2] # -stair[1,1,1,1]'")
        if needs_t:
            p.add_argument("--t", type=_rational_arg, required=True, metavar="P/Q")
        if t_list:
            p.add_argument("--t", type=_rational_arg, action="append", default=[], metavar="P/Q")
        p.add_argument("--json", action="store_true", help="exact machine-readable output")
        p.add_argument("--quiet", action="store_true", help="suppress informational notes")
        if pl_output:
            p.add_argument("--csv", metavar="PATH", help="write decimal samples for plotting")
            p.add_argument("--samples", type=int, default=101, help="number of CSV samples")
        return p

    add("validate", "check the K-complex axioms")
    add("upsilon", "the Upsilon invariant as an exact PL function of t", pl_output=True)
    add("upsilon2", "the secondary invariant at a given t, as a function of s", needs_t=True, pl_output=True)
    add("pivots", "support-line points and one-sided pivots at t", needs_t=True)
    add("v2", "the scalar secondary invariant (t = 1 evaluated at s = 1)")
    add("bounds", "concordance-genus lower bounds", t_list=True)
    add("show", "print the complex in the text format")
    cat_p = sub.add_parser("catalog", help="list the built-in complex names")
    cat_p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ExprParseError, ComplexParseError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, InvalidComplexError, KeyError, ValueError, OSError) as exc:
        message = exc.args[0] if exc.args else exc
        print(f"error: {message}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "catalog":
        if args.json:
            print(json.dumps({"names": CATALOG_NAMES}))
        else:
            print("\n".join(CATALOG_NAMES))
        return 0

    C = parse_and_build(args.expr)

    if args.command == "validate":
        report = C.validate()
        if args.json:
            print(json.dumps({
                "ok": report.ok,
                "checks": [
                    {"name": c.name, "passed": c.passed, "advisory": c.advisory, "detail": c.detail}
                    for c in report.checks
                ],
            }))
        else:
            print(report)
        return 0 if report.ok else 1

    if args.command == "show":
        print(serialize_complex(C), end="")
        return 0

    if args.command == "upsilon":
        f = upsilon(C)
        if args.csv:
            write_csv(f, args.csv, args.samples)
        if args.json:
            print(json.dumps({"upsilon": pl_to_json(f)}))
        elif not args.quiet or not args.csv:
            print("Upsilon(t):")
            print(pl_to_text(f, "t"))
        return 0

    if args.command == "upsilon2":
        res = upsilon2(C, args.t)
        notes = []
        if not res.upsilon2.is_finite:
            notes.append(MIRROR_NOTE)
        if res.smooth_point:
            notes.append("smooth point: Upsilon has equal one-sided pivots at this t")
        if args.csv and res.upsilon2.is_finite:
            write_csv(res.upsilon2, args.csv, args.samples)
        if args.json:
            print(json.dumps({
                "t": format_rational(res.t),
                "gamma_t": format_rational(res.gamma_t),
                "upsilon2": pl_to_json(res.upsilon2),
                "gamma2": pl_to_json(res.gamma2),
                "disjoint": res.zsets.disjoint,
                "notes": notes,
                "witnesses": [
                    {"from": format_rational(a), "to": format_rational(b), "chain": list(names)}
                    for a, b, names in res.witnesses
                ],
            }))
        else:
            print(f"Upsilon2 at t = {res.t} (as a function of s):")
            print(pl_to_text(res.upsilon2, "s"))
            if not args.quiet:
                for note in notes:
                    print(f"note: {note}")
        return 0

    if args.command == "pivots":
        pd = pivot_points(C, args.t)
        jump = delta_upsilon_prime(C, args.t)
        if args.json:
            print(json.dumps({
                "t": format_rational(pd.t),
                "gamma_t": format_rational(pd.gamma_t),
                "on_line": sorted(list(p) for p in pd.on_line),
                "p_minus": list(pd.p_minus),
                "p_plus": list(pd.p_plus),
                "delta": format_rational(pd.delta),
                "derivative_jump": format_rational(jump),
            }))
        else:
            print(f"t = {pd.t}: gamma = {pd.gamma_t}, support-line points {sorted(pd.on_line)}")
            print(f"p- = {pd.p_minus}, p+ = {pd.p_plus}, margin delta = {pd.delta}")
            print(f"derivative jump of Upsilon: {jump}")
        return 0

    if args.command == "v2":
        value = upsilon2_scalar(C)
        notes = [MIRROR_NOTE] if value == POS_INF else []
        if args.json:
            print(json.dumps({"v2": format_rational(value), "notes": notes}))
        else:
            print("+inf" if value == POS_INF else str(value))
            if not args.quiet:
                for note in notes:
                    print(f"note: {note}")
        return 0

    if args.command == "bounds":
        report = genus_report(C, args.t)
        width = diagonal_width(C)
        if args.json:
            print(json.dumps({
                "combined": report.combined,
                "diagonal_width": width,
                "skipped_infinite": list(report.skipped),
                "reports": [
                    {
                        "source": r.source,
                        "slope_bound": r.slope_bound,
                        "breakpoint_bounds": [
                            {"location": format_rational(x), "bound": b}
                            for x, b in r.breakpoint_bounds
                        ],
                        "combined": r.combined,
                    }
                    for r in report.reports
                ],
            }))
        else:
            for r in report.reports:
                bps = ", ".join(f"{x} -> {b}" for x, b in r.breakpoint_bounds) or "none"
                print(f"{r.source}: slope bound {r.slope_bound}, breakpoint bounds {bps}")
            for t in report.skipped:
                print(f"upsilon2[t={t}]: infinite, skipped")
            print(f"combined concordance-genus lower bound: {report.combined}")
            if not args.quiet:
                print(f"diagonal width of the model: {width}")
        return 0

    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
