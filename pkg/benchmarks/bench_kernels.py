"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--points N] [--terms K] [--repeat R]

Reports the best of R wall-clock timings per kernel and the largest
disagreement between the two backends.
"""

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from wellspec import _pykernels

try:
    from wellspec import _ckernels
except ImportError:
    _ckernels = None


def best(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def end_to_end(pure: bool, repeat: int) -> float:
    # backend is fixed at import, so time a fresh interpreter per backend
    env = dict(os.environ)
    env.pop("WELLSPEC_PURE_PYTHON", None)
    if pure:
        env["WELLSPEC_PURE_PYTHON"] = "1"
    code = ("import timeit; from wellspec import continuous; from wellspec.core import WellState;"
            f"print(min(timeit.repeat(lambda: [continuous.normalization(WellState(n)) for n in (1, 2, 3, 4)],"
            f" number=1, repeat={repeat})))")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--points", type=int, default=1_000_000)
    p.add_argument("--terms", type=int, default=1_000_000)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)
    if _ckernels is None:
        sys.exit("compiled extension not built; reinstall with Cython available")

    x = np.linspace(-200.0, 200.0, args.points)
    rows = []
    for n in (1, 2):
        tc = best(lambda: _ckernels.density_array(n, x), args.repeat)
        tp = best(lambda: _pykernels.density_array(n, x), args.repeat)
        diff = np.max(np.abs(_ckernels.density_array(n, x) - _pykernels.density_array(n, x)))
        rows.append((f"density n={n}, {args.points} points", tc, tp, diff))
    for kind, name in ((0, "odd squares"), (1, "SUM1"), (2, "SUM2")):
        tc = best(lambda: _ckernels.series_sum(kind, args.terms), args.repeat)
        tp = best(lambda: _pykernels.series_sum(kind, args.terms), args.repeat)
        diff = abs(_ckernels.series_sum(kind, args.terms) - _pykernels.series_sum(kind, args.terms))
        rows.append((f"{name}, K={args.terms}", tc, tp, diff))
    tc, tp = end_to_end(False, args.repeat), end_to_end(True, args.repeat)
    rows.append(("normalization n=1..4 (end to end)", tc, tp, float("nan")))

    print(f"{'kernel':<40} {'cython s':>10} {'python s':>10} {'speedup':>8} {'max diff':>10}")
    for name, tc, tp, diff in rows:
        print(f"{name:<40} {tc:10.4f} {tp:10.4f} {tp / tc:8.1f} {diff:10.1e}")


if __name__ == "__main__":
    main()
