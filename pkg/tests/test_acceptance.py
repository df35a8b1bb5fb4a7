"""Acceptance criteria, one test each, at the stated tolerances.

Each test records a one-line PASS/FAIL summary that is printed at the end
of the pytest run, whether or not the assertion holds.
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from wellspec import cli, continuous, discrete, orthonormality, series
from wellspec.core import WellState
from wellspec.quadrature import sinc_squared_integral, verify_reduction_chain

from svgdata import load

PI2 = math.pi ** 2


def test_01_normalization(record_criterion):
    t0 = time.perf_counter()
    errs = {n: abs(continuous.normalization(WellState(n)).value - 1) for n in (1, 2, 3, 4)}
    dt = time.perf_counter() - t0
    ok = max(errs.values()) < 1e-6 and dt < 5
    record_criterion("1 normalization", ok, f"max |norm-1| = {max(errs.values()):.2e}, {dt:.2f} s")
    assert ok, errs


def test_02_second_moment(record_criterion):
    t0 = time.perf_counter()
    rel = {n: abs(continuous.moment(WellState(n), 2).value / (n * math.pi) ** 2 - 1) for n in (1, 2)}
    dt = time.perf_counter() - t0
    ok = max(rel.values()) < 1e-4 and dt < 5
    record_criterion("2 second-moment", ok, f"max rel err = {max(rel.values()):.2e}, {dt:.2f} s")
    assert ok, rel


def test_03_fourth_moment_diverges(record_criterion):
    t0 = time.perf_counter()
    r = continuous.moment(WellState(1), 4)
    dt = time.perf_counter() - t0
    ok = isinstance(r, continuous.Divergent) and len(r.growth) == 3 and dt < 5
    growth = getattr(r, "growth", ())
    record_criterion("3 divergence", ok, f"growth ratios {[round(g, 3) for g in growth]}, {dt:.2f} s")
    assert ok


def test_04_discrete_sum(record_criterion):
    s = discrete.probability_sum(1000)
    ok = s.brackets(1.0) and s.width < 1e-8
    record_criterion("4 discrete-sum", ok, f"[{s.lower:.15f}, {s.upper:.15f}] width {s.width:.2e}")
    assert ok


def test_05_energy_series(record_criterion):
    s = series.sum1(10**6)
    err = abs(s.extrapolated - PI2 / 16)
    e = discrete.energy_expectation_sum(10**6)
    ok = err < 1e-6 and s.brackets(PI2 / 16) and e.brackets(PI2 / 2)
    record_criterion("5 energy-series", ok, f"|extrapolated - pi^2/16| = {err:.2e}, bracket width {s.width:.2e}")
    assert ok


def test_06_odd_squares(record_criterion):
    s = series.odd_squares_series(10**4)
    ok = s.width < 1e-8 and s.brackets(PI2 / 8)
    record_criterion("6 pi^2/8-series", ok, f"width {s.width:.2e}, contains pi^2/8 = {s.brackets(PI2 / 8)}")
    assert ok


def test_07_telescoping(record_criterion):
    exact = all(series.exact_partial_sum(series.SUM1, K) - series.exact_partial_sum(series.SUM2, K)
                == Fraction(1, 2) - Fraction(1, 2 * (2 * K + 1)) for K in range(1, 101))
    Ks = sorted({*range(1, 1001), *np.unique(np.logspace(3, 6, 40).astype(int))})
    gap = max(abs(series.partial_sum(series.SUM1, K) - series.partial_sum(series.SUM2, K)
                  - (0.5 - 1 / (2 * (2 * K + 1)))) for K in Ks)
    ok = exact and gap < 1e-14
    record_criterion("7 telescoping", ok, f"exact K<=100: {exact}; float max gap {gap:.2e} over {len(Ks)} K up to 1e6")
    assert ok


def test_08_sinc_integral(record_criterion):
    r = sinc_squared_integral(1e3 * math.pi)
    chain = verify_reduction_chain(1e3 * math.pi, 1e-8)
    err = abs(r.value - math.pi)
    ok = err < 1e-6 and all(e.passed for e in chain)
    record_criterion("8 sinc-integral", ok,
                     f"|I - pi| = {err:.2e}; chain {sum(e.passed for e in chain)}/{len(chain)} consistent")
    assert ok


def test_09_bridge(record_criterion):
    worst = max(abs(discrete.probability(WellState(n), l) - 2 * math.pi * continuous.density(WellState(n), 2 * math.pi * l))
                for n in (1, 2, 3, 4) for l in range(-50, 51))
    ok = worst < 1e-12
    record_criterion("9 bridge", ok, f"max | |c_l|^2 - 2 pi density(2 pi l) | = {worst:.2e}")
    assert ok


def _expected_peaks(n):
    return [0.0] if n % 2 else [-n * math.pi, n * math.pi]


def test_10_peak_structure(record_criterion):
    found = {n: continuous.peak_locations(WellState(n)) for n in range(1, 7)}
    bad = [n for n in found
           if len(found[n]) != len(_expected_peaks(n))
           or any(abs(a - b) > 1e-6 for a, b in zip(found[n], _expected_peaks(n)))]
    ok = not bad
    detail = "; ".join(f"n={n}: {[round(p / math.pi, 5) for p in found[n]]} pi" for n in found)
    record_criterion("10 peak-structure", ok, f"maxima {detail}; mismatched n = {bad}")
    assert ok, detail


def test_11_orthonormality(record_criterion):
    g = orthonormality.periodic_gram(10)
    h = orthonormality.half_period_gram(range(1, 7))
    dev = float(np.max(np.abs(g - np.eye(21))))
    off = abs(abs(h[0, 1]) - 2 / math.pi)
    ok = dev < 1e-12 and off < 1e-10
    record_criterion("11 orthonormality", ok, f"max |G - I| = {dev:.2e}; | |H_12| - 2/pi | = {off:.2e}")
    assert ok


def test_12_figure_reproduction(tmp_path, record_criterion):
    problems = []
    for n in (1, 2):
        path = tmp_path / f"n{n}.svg"
        if cli.main(["figure", "--n", str(n), "--out", str(path)]) != 0:
            problems.append(f"n={n}: figure failed")
            continue
        fig = load(path)
        step = 0.01
        # criterion 9 from the bins sidecar
        for r in fig["bins_csv"]:
            if abs(float(r["probability"]) - 2 * math.pi * float(r["density_at_xi"])) >= 1e-12:
                problems.append(f"n={n} l={r['l']}: bridge")
        # criterion 10 from the density sidecar: grid maxima must sit at the expected peaks
        xi = np.array([float(r["xi"]) for r in fig["density"]])
        d = np.array([float(r["density"]) for r in fig["density"]])
        tops = xi[d >= d.max() * (1 - 1e-9)]
        for p in _expected_peaks(n):
            if not np.any(np.abs(tops - p) <= step):
                problems.append(f"n={n}: no grid maximum at {p / math.pi:g} pi "
                                f"(grid maxima at {[round(float(t) / math.pi, 3) for t in tops]} pi)")
        for col, row in zip(fig["columns"], fig["bins_csv"]):
            if col["data-probability"] != row["probability"]:
                problems.append(f"n={n}: SVG column differs from sidecar")
        if n == 1:
            p0 = next(float(r["probability"]) for r in fig["bins_csv"] if r["l"] == "0")
            if abs(p0 - 8 / PI2) >= 1e-12:
                problems.append("n=1: column l=0 is not 8/pi^2")
    ok = not problems
    record_criterion("12 figure", ok, "sidecars consistent" if ok else "; ".join(problems))
    assert ok, problems


def test_13_negative_control(record_criterion, capsys):
    code = cli.main(["verify", "--profile", "fast", "--self-test-perturb", "1e-3"])
    capsys.readouterr()
    ok = code == 3
    record_criterion("13 negative-control", ok, f"verify exit code {code}")
    assert ok
