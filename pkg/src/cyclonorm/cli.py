"""Command-line front end: ``cyclonorm {triangle,norm,poly,verify,raref,rfunc}``.

Exit status: 0 on success, 1 when a verification fails, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .core_arith import check_prime_modulus, check_residue_pair, gap_table, is_prime
from .counting_oracles import BudgetExceeded
from .norm_poly import assemble, evaluate, numeric_norm
from .rarefaction import SequenceSpec, rarefaction_report
from .triangle import build_triangle
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _prime_and_pair(args) -> tuple[int, tuple[int, int]]:
    if not is_prime(args.p):
        raise InputError(f"{args.p} is not prime")
    try:
        p = check_prime_modulus(args.p)
        return p, check_residue_pair(p, args.i1, args.i2)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_triangle(args, out) -> int:
    p, pair = _prime_and_pair(args)
    t = build_triangle(p, pair)
    if args.format == "json":
        out.write(t.to_json() + "\n")
    elif args.format == "csv":
        out.write(t.to_csv())
    else:
        out.write(t.render())
    return EXIT_OK


def cmd_poly(args, out) -> int:
    p, pair = _prime_and_pair(args)
    out.write(assemble(build_triangle(p, pair)).to_json() + "\n")
    return EXIT_OK


def cmd_norm(args, out) -> int:
    p, pair = _prime_and_pair(args)
    if len(args.at) != 3:
        raise InputError("--at needs exactly three integers y0,y1,y2")
    y0, y1, y2 = args.at
    value = evaluate(assemble(build_triangle(p, pair)), y0, y1, y2)
    out.write(f"{value}\n")
    if args.check_numeric:
        approx = numeric_norm(p, pair, y0, y1, y2)
        dev = abs(approx - value) / max(1, abs(value))
        out.write(f"numeric {approx:.10g} relative deviation {dev:.3e}\n")
        if dev > 1e-6:
            return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args, out) -> int:
    try:
        res = run_suite(args.suite, args.p_max)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    for msg in res.failures[:20]:
        out.write(f"  {msg}\n")
    out.write(res.summary() + "\n")
    return EXIT_OK if res.passed else EXIT_FAIL


def cmd_raref(args, out) -> int:
    try:
        seq = SequenceSpec(args.b, tuple(args.digits))
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if seq.d > 2:
        raise InputError(f"d = {seq.d}: at most two nonzero digits beyond t_0 are supported")
    if args.p < 3 or not is_prime(args.p):
        raise InputError(f"{args.p} is not an odd prime")
    if args.n_max > 10**8:
        raise InputError("--n-max must be at most 10^8")
    report = rarefaction_report(seq, args.p, args.n_max)
    for note in report.notes:
        print(f"warning: {note}", file=sys.stderr)
    if args.format == "json":
        out.write(report.to_json() + "\n")
    elif args.format == "csv":
        out.write(report.checkpoints_csv())
    else:
        th, em = report.theoretical_exponent, report.empirical_exponent
        out.write(f"sequence     b={seq.b} digits={','.join(map(str, seq.digits))}\n")
        out.write(f"p            {args.p}\n")
        out.write(f"norm         {report.verdict.norm}\n")
        out.write(f"generator    {report.verdict.generator}\n")
        out.write(f"condition    {report.condition_holds}\n")
        out.write(f"theoretical  {'n/a' if th is None else f'{th:.4f}'}\n")
        if report.fit is None:
            out.write("empirical    n/a\n")
        else:
            out.write(
                f"empirical    {em:.4f} ({report.fit.used} checkpoints, "
                f"{report.fit.discarded} with S(N)=0 discarded)\n"
            )
        for N, S in report.checkpoints:
            out.write(f"  S({N}) = {S}\n")
    return EXIT_OK


def cmd_rfunc(args, out) -> int:
    if not 0 <= args.n_max <= 10**7:
        raise InputError("--n-max must lie in [0, 10^7]")
    f, r = gap_table(args.n_max)
    top = int(r.max())
    where = int(np.argmax(r))
    out.write(f"# max R(n) for n <= {args.n_max}: {top} (first at n = {where})\n")
    out.write("n,f,R\n")
    best = -1
    for n in range(args.n_max + 1):
        if args.all or r[n] > best:
            best = max(best, int(r[n]))
            out.write(f"{n},{int(f[n])},{int(r[n])}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="cyclonorm",
        description="Coefficients and values of the norm polynomials prod_j (Y0 + z^(i1 j) Y1 + z^(i2 j) Y2).",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_pair(sp):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--i1", type=int, required=True)
        sp.add_argument("--i2", type=int, required=True)

    sp = sub.add_parser("triangle", help="print the finite Pascal's triangle")
    add_pair(sp)
    sp.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    sp.set_defaults(func=cmd_triangle)

    sp = sub.add_parser("poly", help="export the norm polynomial as JSON")
    add_pair(sp)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("norm", help="evaluate the norm polynomial exactly")
    add_pair(sp)
    sp.add_argument("--at", type=_int_list, required=True, metavar="Y0,Y1,Y2",
                    help="point to evaluate at; write --at=-1,0,1 when y0 is negative")
    sp.add_argument("--check-numeric", action="store_true",
                    help="also multiply the complex factors in floating point")
    sp.set_defaults(func=cmd_norm)

    sp = sub.add_parser("verify", help="run an invariant suite")
    sp.add_argument("suite", choices=tuple(SUITES))
    sp.add_argument("--p-max", type=int, required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("raref", help="growth of p-rarefied sums of a digit sequence")
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--digits", type=_int_list, required=True, metavar="T0,...,T(b-1)")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    sp.set_defaults(func=cmd_raref)

    sp = sub.add_parser("rfunc", help="iterations of n -> nextprime(n) - n - 1")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--all", action="store_true", help="list every n, not only record setters")
    sp.set_defaults(func=cmd_rfunc)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, BudgetExceeded) as exc:
        print(f"cyclonorm: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
