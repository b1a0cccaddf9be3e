"""Command-line interface.

Usage examples::

    weylgen dim --type A --rank 3 --weight 0,2,0
    weylgen series --type A --rank 2 --weights "3,0;0,3" --format latex
    weylgen specialize --type A --rank 3 --weights "2,0,0;0,2,0" --grading 1,2
    weylgen check --type G --rank 2 --weights "1,0;0,1" --bounds 4,4
    weylgen preset sym-det --n 4 --k 2 --action specialize

Product groups repeat ``--type/--rank``; weights are then concatenated in
flag order.  ``--weights`` separates weights by ``;`` and coefficients by
``,``.

Exit codes: 0 success, 1 verification mismatch, 2 usage or domain error,
3 internal invariant failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import IntegralityError, WeylGenError
from .genfun import ConeSpec, UniRational, hilbert_series, reduce_univariate, specialize
from .oracle import VerificationReport, verify_equivalence
from .polyring import EulerRational, Poly
from .presets import PRESETS
from .rootsys import build_root_system, weyl_dim

__all__ = [
    "main",
    "series_to_json",
    "series_from_json",
    "unirational_to_json",
    "report_to_json",
]

FORMATS = ("text", "latex", "json")


class UsageError(WeylGenError, ValueError):
    pass


# -- serialization -----------------------------------------------------

def _coeff_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _terms_json(p: Poly) -> list[dict]:
    return [{"exp": list(e), "coeff": _coeff_str(c)} for e, c in p.sorted_terms()]


def series_to_json(f: EulerRational) -> str:
    doc = {"vars": f.nvars, "numerator": _terms_json(f.numerator), "den_exps": list(f.den_exps)}
    return json.dumps(doc)


def series_from_json(text: str) -> EulerRational:
    try:
        doc = json.loads(text)
        k = int(doc["vars"])
        terms = {tuple(t["exp"]): Fraction(t["coeff"]) for t in doc["numerator"]}
        return EulerRational(Poly(terms, k), tuple(doc["den_exps"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, WeylGenError):
            raise
        raise UsageError(f"malformed series JSON: {exc}") from exc


def unirational_to_json(f: UniRational) -> str:
    doc = {
        "vars": 1,
        "numerator": _terms_json(f.numerator),
        "denominator": _terms_json(f.denominator),
        "D": f.one_minus_q_power(),
    }
    return json.dumps(doc)


def report_to_json(r: VerificationReport) -> str:
    doc = {
        "checked": r.checked,
        "mismatches": [{"a": list(a), "expected": str(e), "got": str(g)} for a, e, g in r.mismatches],
        "passed": r.passed,
    }
    return json.dumps(doc)


def format_series(f: EulerRational, fmt: str) -> str:
    if fmt == "json":
        return series_to_json(f)
    if fmt == "latex":
        return rf"\frac{{{f.numerator.to_str(latex=True)}}}{{{f.denominator_str(latex=True)}}}"
    names = [f"q_{i + 1}" for i in range(f.nvars)]
    num = f.numerator.to_str(names)
    if len(f.numerator) > 1:
        num = f"({num})"
    if not any(f.den_exps):
        return num
    den = f.denominator_str(names)
    if sum(1 for e in f.den_exps if e) > 1:
        den = f"({den})"
    return f"{num}/{den}"


def format_unirational(f: UniRational, fmt: str) -> str:
    if fmt == "json":
        return unirational_to_json(f)
    return f.to_str(latex=fmt == "latex")


# -- argument parsing --------------------------------------------------

def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _weight_list(text: str) -> list[list[int]]:
    weights = [_int_list(w) for w in text.split(";") if w.strip()]
    if not weights:
        raise UsageError("no weights given")
    return weights


def _root_system(args):
    types = args.type or []
    ranks = args.rank or []
    if not types or len(types) != len(ranks):
        raise UsageError("give matching --type/--rank pairs")
    return build_root_system(list(zip(types, ranks)))


def _cone(args) -> ConeSpec:
    if not args.weights:
        raise UsageError("--weights is required")
    return ConeSpec(_root_system(args), _weight_list(args.weights))


def _bounds(args, k: int) -> list[int]:
    if args.bounds is None:
        return [5] * k
    bounds = _int_list(args.bounds)
    if len(bounds) == 1 and k > 1:
        bounds *= k
    return bounds


def _add_group(p, weights=True):
    p.add_argument("--type", action="append", help="Lie type A-G; repeat for products")
    p.add_argument("--rank", action="append", type=int, help="rank of the matching --type")
    if weights:
        p.add_argument("--weights", help='generators, e.g. "3,0;0,3"')


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgen",
        description="Multigraded generating functions for Weyl dimensions.",
        epilog="Weights use fundamental-weight coordinates: ';' between weights, "
               "',' between coefficients.  Products: repeat --type/--rank; "
               "coefficients are concatenated in that order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="Weyl dimension of one irreducible module")
    _add_group(p, weights=False)
    p.add_argument("--weight", required=True, help="e.g. 2,0,0")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("series", help="closed-form multigraded series")
    _add_group(p)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("specialize", help="substitute q_j -> q^w_j and reduce")
    _add_group(p)
    p.add_argument("--grading", help="positive weights w_j, default all 1")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("check", help="verify the closed form against brute force")
    _add_group(p)
    p.add_argument("--bounds", help="per-variable bounds, default 5")
    p.add_argument("--series", help="JSON file with a series to check instead of computing one")
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("preset", help="determinantal and fundamental presets")
    p.add_argument("name", help=", ".join(PRESETS))
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    _add_group(p, weights=False)
    p.add_argument("--action", choices=("series", "specialize", "check"), default="specialize")
    p.add_argument("--bounds")
    p.add_argument("--format", choices=FORMATS, default="text")
    return parser


# -- commands ----------------------------------------------------------

def cmd_dim(args) -> tuple[int, str]:
    rs = _root_system(args)
    d = weyl_dim(rs, _int_list(args.weight))
    return 0, json.dumps({"dim": str(d)}) if args.format == "json" else str(d)


def _series(cone, fmt):
    return 0, format_series(hilbert_series(cone), fmt)


def _specialize(cone, grading, fmt):
    u = reduce_univariate(specialize(hilbert_series(cone), grading))
    return 0, format_unirational(u, fmt)


def _check(cone, bounds, fmt, series_path=None):
    if series_path:
        with open(series_path) as fh:
            f = series_from_json(fh.read())
    else:
        f = hilbert_series(cone)
    report = verify_equivalence(f, cone, bounds)
    text = report_to_json(report) if fmt == "json" else str(report)
    return (0 if report.passed else 1), text


def cmd_series(args):
    return _series(_cone(args), args.format)


def cmd_specialize(args):
    cone = _cone(args)
    grading = _int_list(args.grading) if args.grading else [1] * cone.k
    return _specialize(cone, grading, args.format)


def cmd_check(args):
    cone = _cone(args)
    return _check(cone, _bounds(args, cone.k), args.format, args.series)


def cmd_preset(args):
    if args.name not in PRESETS:
        raise UsageError(f"unknown preset {args.name!r}; choose from {', '.join(PRESETS)}")
    if args.name == "fundamental":
        problem = PRESETS["fundamental"](_root_system(args))
    else:
        if args.n is None or args.k is None:
            raise UsageError(f"preset {args.name} needs --n and --k")
        problem = PRESETS[args.name](args.n, args.k)
    if args.action == "series":
        return _series(problem.cone, args.format)
    if args.action == "specialize":
        return _specialize(problem.cone, problem.grading, args.format)
    return _check(problem.cone, _bounds(args, problem.cone.k), args.format)


COMMANDS = {
    "dim": cmd_dim,
    "series": cmd_series,
    "specialize": cmd_specialize,
    "check": cmd_check,
    "preset": cmd_preset,
}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = COMMANDS[args.command](args)
    except IntegralityError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (WeylGenError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
