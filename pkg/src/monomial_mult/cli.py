"""Command line front end: ``monomial-mult <subcommand> IDEAL [options]``.

Exit status: 0 success, 2 unparseable input, 3 zero ideal, 4 failed
cross-check under ``--verify`` / ``verify``.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import oracle
from .lattice import (
    MonomialIdeal,
    ParseError,
    ZeroIdealError,
    as_fraction,
    format_fraction,
    format_ideal,
    minimalize,
    ideal_from_json,
    parse_ideal,
)
from .multiplier import floor_ideal, integral_closure, multiplier_box, multiplier_ideal
from .plot import render_csv, render_svg
from .polyhedron import classify_grid, newton_polyhedron, scale
from .threshold import lct, threshold_search

EXIT_PARSE, EXIT_ZERO, EXIT_VERIFY = 2, 3, 4


class UsageError(Exception):
    pass


def load_ideal(args) -> MonomialIdeal:
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    elif args.ideal is not None and args.ideal != "-":
        text = args.ideal
    else:
        text = sys.stdin.read()
    text = text.strip()
    if text.startswith("{"):
        try:
            ideal = ideal_from_json(text)
        except (json.JSONDecodeError, ValueError) as exc:
            raise ParseError(str(exc)) from exc
        if args.vars is not None and args.vars != ideal.dim:
            raise ParseError(f"--vars {args.vars} disagrees with nvars {ideal.dim}")
        return ideal
    return parse_ideal(text, args.vars)


def _ideal_doc(ideal: MonomialIdeal) -> dict:
    return ideal.to_json()


def _emit_ideal(ideal: MonomialIdeal, as_json: bool):
    if as_json:
        print(json.dumps(_ideal_doc(ideal), separators=(",", ":")))
    else:
        print(format_ideal(ideal))


def cross_check(ideal: MonomialIdeal, r=Fraction(1)) -> list[str]:
    """Compare the facet path with the LP oracle; returns human readable differences."""
    diffs = []
    P = newton_polyhedron(ideal)
    gens = ideal.generators
    n = ideal.dim
    box = multiplier_box(ideal, r)
    J = multiplier_ideal(ideal, r, P)
    J_lp = oracle.brute_multiplier(gens, r, box)
    if J != J_lp:
        diffs.append(f"multiplier ideal: facets give ({J}), LP gives ({J_lp})")
    F = floor_ideal(P, r)
    if F != J:
        diffs.append(f"floor ideal ({F}) differs from multiplier ideal ({J})")
    shape = [b + 1 for b in box]
    main = classify_grid(scale(P, r), shape, shift=[1] * n)
    lp = oracle.lp_classify_grid(gens, shape, shift=[1] * n, r=r)
    bad = np.argwhere(main != lp)
    for lam in bad[:10]:
        diffs.append(f"classification of {tuple(int(x) + 1 for x in lam)} in {format_fraction(r)}*P differs")
    closure_shape = [a + 2 for a in ideal.max_exponents()]
    lp_closure = oracle.lp_classify_grid(gens, closure_shape) >= 0
    C_lp = minimalize(n, oracle.minimal_lattice_points(lp_closure))
    C = integral_closure(ideal, P)
    if C != C_lp:
        diffs.append(f"integral closure: facets give ({C}), LP gives ({C_lp})")
    return diffs


def _rational(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monomial-mult",
        description="Newton polyhedra, multiplier ideals and log canonical thresholds "
                    "of monomial ideals, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    def ideal_args(p):
        p.add_argument("ideal", nargs="?", help='e.g. "x^8, y^6"; omit or "-" to read stdin')
        p.add_argument("-f", "--file", help="read the ideal (text or JSON) from a file")
        p.add_argument("--vars", type=int, help="number of variables (default: highest index used)")

    p = sub.add_parser("facets", help="facet inequalities and vertices of the Newton polyhedron")
    ideal_args(p)

    p = sub.add_parser("mult", help="multiplier ideal J(r * a)")
    ideal_args(p)
    p.add_argument("-r", "--coeff", type=_rational, required=True, help="exact rational, e.g. 3/2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true", help="also run the LP oracle and compare")

    p = sub.add_parser("lct", help="log canonical threshold and remoteness (JSON)")
    ideal_args(p)
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("closure", help="integral closure")
    ideal_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true")

    p = sub.add_parser("plot2d", help="SVG picture of a 2-variable Newton polygon")
    ideal_args(p)
    p.add_argument("--csv", action="store_true", help="emit the point table as CSV instead")

    p = sub.add_parser("search", help="distinct thresholds below 1 over a box of ideals")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-exp", type=int, required=True)
    p.add_argument("--max-gens", type=int, default=1)
    p.add_argument("--diagonal", action="store_true", help="only diagonal ideals")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="diff the facet path against the LP oracle")
    ideal_args(p)
    p.add_argument("-r", "--coeff", type=_rational, default=Fraction(1))
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "search":
            records = threshold_search(args.dim, args.max_exp, args.max_gens,
                                       family="diagonal" if args.diagonal else "all",
                                       jobs=args.jobs)
            for t, I in records:
                print(json.dumps({"threshold": format_fraction(t), "witness_ideal": I.to_json()},
                                 separators=(",", ":")))
            return 0
        ideal = load_ideal(args)
        if ideal.is_zero:
            raise ZeroIdealError()
        cmd = args.command
        if cmd == "facets":
            print(json.dumps(newton_polyhedron(ideal).to_json(), separators=(",", ":")))
        elif cmd == "mult":
            _emit_ideal(multiplier_ideal(ideal, args.coeff), args.json)
        elif cmd == "lct":
            print(json.dumps(lct(ideal).to_json(), separators=(",", ":")))
        elif cmd == "closure":
            _emit_ideal(integral_closure(ideal), args.json)
        elif cmd == "plot2d":
            if ideal.dim != 2:
                raise UsageError("plot2d needs exactly 2 variables")
            sys.stdout.write(render_csv(ideal) if args.csv else render_svg(ideal))
        if cmd == "verify" or getattr(args, "verify", False):
            r = getattr(args, "coeff", Fraction(1))
            diffs = cross_check(ideal, r)
            for d in diffs:
                print(d, file=sys.stderr if cmd != "verify" else sys.stdout)
            if diffs:
                return EXIT_VERIFY
    except ZeroIdealError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO
    except (ParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
