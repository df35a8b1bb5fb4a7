"""Command line: ``wellspec {density,coefficients,verify,figure}``.

Exit codes: 0 success, 1 bad arguments, 2 I/O failure, 3 a verification
check failed.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import continuous, discrete
from .core import DomainError, WellState
from .figure import FigureSpec, grid, write_figure
from .output import csv_text, fmt, write_text
from .verify import PROFILES, run_suite

EXIT_OK, EXIT_ARGS, EXIT_IO, EXIT_VERIFY = 0, 1, 2, 3
MAX_ROWS = 50_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


def _global_flags(p, suppress):
    default = argparse.SUPPRESS if suppress else None
    p.add_argument("--n", type=int, default=default, help="quantum number of the well eigenstate")
    p.add_argument("--out", default=default, help="output path (stdout when omitted, where allowed)")
    p.add_argument("--threads", type=int, default=default, help="threads for grid evaluation")
    p.add_argument("--profile", choices=sorted(PROFILES), default=default, help="verification profile")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wellspec", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="continuous momentum density on a grid (CSV)")
    _global_flags(d, suppress=True)
    d.add_argument("--xi-min", type=float, required=True)
    d.add_argument("--xi-max", type=float, required=True)
    d.add_argument("--step", type=float, required=True)

    c = sub.add_parser("coefficients", help="periodic-basis probabilities (CSV)")
    _global_flags(c, suppress=True)
    c.add_argument("--l-max", type=int, required=True)

    v = sub.add_parser("verify", help="run the identity suite")
    _global_flags(v, suppress=True)
    v.add_argument("--self-test-perturb", type=float, default=0.0,
                   help="shift every computed value by this relative amount (negative control)")

    f = sub.add_parser("figure", help="SVG of the spectrum plus sidecar CSVs")
    _global_flags(f, suppress=True)
    f.add_argument("--l-max", type=int, default=3, help="discrete columns for |l| <= l-max")
    f.add_argument("--step", type=float, default=0.01)
    f.add_argument("--xi-max", type=float, default=None)
    return parser


def _state(args) -> WellState:
    if args.n is None:
        raise UsageError("--n is required")
    try:
        return WellState(args.n)
    except DomainError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        write_text(out, text)


def cmd_density(args) -> int:
    state = _state(args)
    if not (math.isfinite(args.step) and args.step > 0):
        raise UsageError("--step must be positive")
    if not (math.isfinite(args.xi_min) and math.isfinite(args.xi_max) and args.xi_min <= args.xi_max):
        raise UsageError("need finite --xi-min <= --xi-max")
    if (args.xi_max - args.xi_min) / args.step > MAX_ROWS:
        raise UsageError("grid too large")
    xi = grid(args.xi_min, args.xi_max, args.step)
    d = continuous.density_grid(state, xi, args.threads)
    _emit(csv_text(["xi", "density"], zip(xi, d)), args.out)
    return EXIT_OK


def cmd_coefficients(args) -> int:
    state = _state(args)
    if args.l_max < 0:
        raise UsageError("--l-max must be non-negative")
    rows = [(c.l, c.xi, c.probability) for c in discrete.spectrum(state, args.l_max)]
    if args.l_max >= 1:
        s = discrete.probability_sum(args.l_max, state)
        partial, tail_upper = s.value, s.tail_upper
    else:
        s = discrete.probability_sum(1, state)
        partial = discrete.probability(state, 0)
        tail_upper = s.value - partial + s.tail_upper
    comment = f"partial_sum={fmt(partial)} tail_upper={fmt(tail_upper)}"
    _emit(csv_text(["l", "xi", "probability"], rows, [comment]), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_suite(args.profile or "strict", perturb=args.self_test_perturb)
    print(report.summary())
    if args.out is not None:
        write_text(args.out, report.to_text())
    return EXIT_OK if report.all_passed else EXIT_VERIFY


def cmd_figure(args) -> int:
    if args.out is None:
        raise UsageError("figure needs --out")
    try:
        xi_range = None if args.xi_max is None else (-args.xi_max, args.xi_max)
        spec = FigureSpec(n=_state(args).n, discrete_l_range=args.l_max, grid_step=args.step, xi_range=xi_range)
    except DomainError as exc:
        raise UsageError(str(exc)) from None
    write_figure(spec, Path(args.out), args.threads)
    return EXIT_OK


COMMANDS = {"density": cmd_density, "coefficients": cmd_coefficients,
            "verify": cmd_verify, "figure": cmd_figure}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("n", "out", "threads", "profile"):
        if not hasattr(args, name):
            setattr(args, name, None)
    if args.threads is None:
        args.threads = 1
    try:
        if args.threads < 1:
            raise UsageError("--threads must be at least 1")
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"wellspec {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except OSError as exc:
        print(f"wellspec {args.command}: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
