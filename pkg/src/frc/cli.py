"""Command-line interface.

Exit codes: 0 success, 2 input or domain error, 3 empty search result,
4 no solution for the generalized cutoff.
"""

from __future__ import annotations

import argparse
import csv
import sys
from typing import Sequence

from . import __version__
from .alpha import N_DEFAULT, NB_MAX_DEFAULT, alpha, alpha_full, search_interval
from .codata import default_dataset, find_record, interval_of
from .errors import FRCError, NoSolutionError
from .mass import delta_m_ratio
from .numerics import format_sig, real, round_decimal
from .renorm_general import cutoff_general, lambda_roots, renorm_general
from .renorm_simple import NB_PHYSICAL, cutoff_simple, renorm_simple, z3_gt
from . import reports

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_EMPTY = 3
EXIT_NO_SOLUTION = 4

ALPHA_PLACES = 12
CURVE_SIG = 20
QUANTITIES = ("alpha", "cutoff-simple", "cutoff-general", "z3", "dm")


class UsageError(FRCError):
    pass


def _emit(rows: list[list[str]], header: list[str], fmt: str, out) -> None:
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return
    widths = [max(len(str(c)) for c in col) for col in zip(header, *rows)]
    for row in [header, *rows]:
        out.write("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() + "\n")


def _alpha_str(x) -> str:
    return round_decimal(x, ALPHA_PLACES)


def _lam(args):
    if getattr(args, "lam", None) is not None:
        return real(args.lam)
    return lambda_roots(alpha(args.nb_physical)).physical


def _cutoff(args, nb):
    if args.scheme == "simple":
        return cutoff_simple(nb, args.nb_physical)
    return cutoff_general(nb, _lam(args), args.nb_physical)


def cmd_eval(args, out) -> int:
    out.write(round_decimal(alpha_full(args.n, args.nb), args.digits) + "\n")
    return EXIT_OK


def cmd_search(args, out) -> int:
    if args.record is not None:
        if args.min is not None or args.max is not None:
            raise UsageError("use either --record or --min/--max, not both")
        try:
            rec = find_record(default_dataset(args.dataset), args.record)
        except KeyError:
            raise UsageError(f"unknown record {args.record!r}") from None
        lo, hi = interval_of(rec, args.k)
    else:
        if args.min is None or args.max is None:
            raise UsageError("search needs --record or both --min and --max")
        lo, hi = real(args.min), real(args.max)
    outcome = search_interval(args.n, lo, hi, args.nb_max)
    if not outcome.matches:
        sys.stderr.write(
            f"no solutions: no N_b in [1, {args.nb_max}] with alpha in "
            f"[{_alpha_str(lo)}, {_alpha_str(hi)}]\n"
        )
        return EXIT_EMPTY
    rows = [[str(p.nb), _alpha_str(p.alpha)] for p in outcome.matches]
    _emit(rows, ["N_b", "alpha"], args.format, out)
    return EXIT_OK


def cmd_renorm(args, out) -> int:
    sig = args.sig
    if args.scheme == "simple":
        r = renorm_simple(args.nb, args.nb_physical)
        rows = [
            ["N_b", str(r.nb)],
            ["alpha_th", _alpha_str(r.alpha_th)],
            ["Z3", format_sig(r.z3, sig)],
            ["Lambda/m", format_sig(r.lambda_over_m, sig)],
            ["alpha_R", _alpha_str(r.alpha_R)],
        ]
    else:
        r = renorm_general(args.nb, _lam(args), args.nb_physical)
        rows = [
            ["N_b", str(r.nb)],
            ["lambda", format_sig(r.lam, sig)],
            ["alpha_g", _alpha_str(r.alpha_g)],
            ["Z3", format_sig(r.z3, sig)],
            ["Lambda/m", format_sig(r.lambda_over_m, sig)],
            ["C", format_sig(r.C, sig)],
            ["alpha_R", _alpha_str(r.alpha_R)],
        ]
    _emit(rows, ["quantity", "value"], args.format, out)
    return EXIT_OK


def cmd_mass(args, out) -> int:
    x = _cutoff(args, args.nb)
    rows = [
        ["N_b", str(args.nb)],
        ["Lambda/m", format_sig(x, CURVE_SIG)],
        ["delta_m/m", format_sig(delta_m_ratio(args.nb, x), args.sig)],
    ]
    _emit(rows, ["quantity", "value"], args.format, out)
    return EXIT_OK


def cmd_report(args, out) -> int:
    if args.kind == "table1":
        rows = [[r.label, "" if r.nb is None else str(r.nb), r.alpha_str] for r in reports.table1(default_dataset(args.dataset))]
        _emit(rows, ["label", "N_b", "alpha"], args.format, out)
    elif args.kind == "prediction":
        p = reports.prediction(default_dataset(args.dataset))
        if args.format == "csv":
            _emit(
                [[str(p.nb), _alpha_str(p.alpha), _alpha_str(p.interval[0]), _alpha_str(p.interval[1]),
                  " ".join(map(str, p.matches)), format_sig(abs(p.diff), 6)]],
                ["N_b", "alpha", "lo", "hi", "matches", "abs_diff"],
                "csv",
                out,
            )
        else:
            out.write("\n".join(p.lines()) + "\n")
    else:
        entries = reports.discrepancies()
        if args.format == "csv":
            _emit([[e.key, e.where, e.printed, e.computed, e.detail] for e in entries],
                  ["key", "where", "printed", "computed", "detail"], "csv", out)
        else:
            for i, e in enumerate(entries, 1):
                out.write(f"{i}. [{e.key}] {e.where}\n")
                out.write(f"   printed:  {e.printed}\n")
                out.write(f"   computed: {e.computed}\n")
                out.write(f"   {e.detail}\n")
    return EXIT_OK


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected LO..HI") from None
    if not 1 <= lo <= hi:
        raise UsageError(f"bad range {text!r}; need 1 <= LO <= HI")
    return lo, hi


def cmd_curve(args, out) -> int:
    lo, hi = _parse_range(args.range)
    q = args.quantity
    if q == "cutoff-general" or (q == "dm" and args.scheme == "general"):
        lam = _lam(args)
    sig = args.sig

    def value(nb):
        if q == "alpha":
            return alpha_full(args.n, nb)
        if q == "cutoff-simple":
            return cutoff_simple(nb, args.nb_physical)
        if q == "cutoff-general":
            return cutoff_general(nb, lam, args.nb_physical)
        if q == "z3":
            return z3_gt(nb, args.nb_physical)
        x = cutoff_simple(nb, args.nb_physical) if args.scheme == "simple" else cutoff_general(nb, lam, args.nb_physical)
        return delta_m_ratio(nb, x)

    rows = [[str(nb), format_sig(value(nb), sig)] for nb in range(lo, hi + 1)]
    _emit(rows, ["N_b", q], args.format, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frc",
        description="Fine-structure formula and finite renormalization calculator",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_, allow_abbrev=False)
        p.set_defaults(func=func)
        return p

    def fmt(p, default="table"):
        p.add_argument("--format", choices=("table", "csv"), default=default)

    def scheme(p):
        p.add_argument("--scheme", choices=("simple", "general"), default="simple")
        p.add_argument("--lambda", dest="lam", default=None,
                       help="scale factor for the general scheme (default: physical root)")
        p.add_argument("--nb-physical", type=int, default=NB_PHYSICAL)

    p = add("eval", cmd_eval, "evaluate alpha(N, N_b)")
    p.add_argument("--n", type=int, default=N_DEFAULT)
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--digits", type=int, default=ALPHA_PLACES)

    p = add("search", cmd_search, "list N_b whose alpha lies in an interval")
    p.add_argument("--record")
    p.add_argument("--min")
    p.add_argument("--max")
    p.add_argument("--k", default="1", help="coverage factor applied to the record uncertainty")
    p.add_argument("--nb-max", type=int, default=NB_MAX_DEFAULT)
    p.add_argument("--n", type=int, default=N_DEFAULT)
    p.add_argument("--dataset")
    fmt(p)

    p = add("renorm", cmd_renorm, "charge renormalization at one N_b")
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--sig", type=int, default=CURVE_SIG)
    scheme(p)
    fmt(p)

    p = add("mass", cmd_mass, "mass counter-term delta_m/m")
    p.add_argument("--nb", type=int, required=True)
    p.add_argument("--sig", type=int, default=9)
    scheme(p)
    fmt(p)

    p = add("report", cmd_report, "canned reports")
    p.add_argument("kind", choices=("table1", "prediction", "discrepancies"))
    p.add_argument("--dataset")
    fmt(p)

    p = add("curve", cmd_curve, "tabulate a quantity over a range of N_b")
    p.add_argument("--quantity", choices=QUANTITIES, required=True)
    p.add_argument("--range", required=True, help="LO..HI, inclusive")
    p.add_argument("--n", type=int, default=N_DEFAULT)
    p.add_argument("--sig", type=int, default=CURVE_SIG)
    scheme(p)
    fmt(p, default="csv")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except NoSolutionError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NO_SOLUTION
    except (FRCError, ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
