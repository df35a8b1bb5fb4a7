"""The full identity suite behind ``wellspec verify``."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from . import continuous, discrete, orthonormality, series
from .core import WellState
from .quadrature import verify_reduction_chain
from .report import VerificationEntry, VerificationReport

PI2 = math.pi ** 2


@dataclass(frozen=True)
class Profile:
    truncation: float
    norm_tol: float
    second_moment_rtol: float
    prob_K: int
    energy_K: int
    energy_tol: float
    odd_K: int
    bracket_width: float
    exact_K: int
    float_Ks: tuple[int, ...]
    telescope_tol: float
    sinc_T: float
    sinc_tol: float
    bridge_l: int
    gram_l: int
    gram_quad_l: int


PROFILES = {
    "strict": Profile(
        truncation=1e4 * math.pi, norm_tol=1e-6, second_moment_rtol=1e-4,
        prob_K=1000, energy_K=10**6, energy_tol=1e-6, odd_K=10**4, bracket_width=1e-8,
        exact_K=100, float_Ks=(1, 10, 100, 1000, 10**4, 10**5, 10**6), telescope_tol=1e-14,
        sinc_T=1e3 * math.pi, sinc_tol=1e-8, bridge_l=50, gram_l=10, gram_quad_l=10,
    ),
    "fast": Profile(
        truncation=1e3 * math.pi, norm_tol=1e-5, second_moment_rtol=1e-3,
        prob_K=1000, energy_K=10**4, energy_tol=1e-6, odd_K=10**4, bracket_width=1e-8,
        exact_K=30, float_Ks=(1, 10, 100, 1000, 10**4), telescope_tol=1e-14,
        sinc_T=1e2 * math.pi, sinc_tol=1e-6, bridge_l=20, gram_l=10, gram_quad_l=3,
    ),
}


def _bracket_entries(name, partial, target, max_width, provenance):
    mid = 0.5 * (partial.lower + partial.upper)
    half = 0.5 * (partial.upper - partial.lower)
    return [
        VerificationEntry(f"{name}.bracket", target, mid, half, provenance),
        VerificationEntry(f"{name}.bracket_width", 0.0, partial.width, max_width, provenance),
    ]


def continuous_entries(p: Profile) -> list[VerificationEntry]:
    out = []
    for n in (1, 2, 3, 4):
        r = continuous.normalization(WellState(n), p.truncation)
        out.append(VerificationEntry(f"continuous.normalization_n{n}", 1.0, r.value, p.norm_tol,
                                     "continuous momentum density integrates to one"))
    for n in (1, 2):
        target = (n * math.pi) ** 2
        r = continuous.moment(WellState(n), 2, p.truncation)
        out.append(VerificationEntry(f"continuous.second_moment_n{n}", target, r.value,
                                     p.second_moment_rtol * target,
                                     "continuous density reproduces <p^2> = (n pi hbar/L)^2"))
    r = continuous.moment(WellState(1), 4, p.truncation)
    out.append(VerificationEntry("continuous.fourth_moment_diverges", 1.0,
                                 float(isinstance(r, continuous.Divergent)), 0.0,
                                 "fourth momentum moment diverges for the ground state"))
    return out


def discrete_entries(p: Profile) -> list[VerificationEntry]:
    out = _bracket_entries(f"discrete.probability_sum_K{p.prob_K}", discrete.probability_sum(p.prob_K),
                           1.0, p.bracket_width, "ground-state periodic probabilities sum to one")
    e = discrete.energy_expectation_sum(p.energy_K)
    e1 = PI2 / 2.0
    # in units of E_1 the series is (16/pi^2) SUM1, so compare SUM1 directly
    s1 = e.scaled(PI2 / (16.0 * e1))
    out.append(VerificationEntry(f"discrete.energy_sum_extrapolated_K{p.energy_K}", PI2 / 16.0,
                                 s1.extrapolated, p.energy_tol,
                                 "energy over the periodic spectrum gives SUM1 = pi^2/16"))
    mid = 0.5 * (s1.lower + s1.upper)
    out.append(VerificationEntry(f"discrete.energy_sum_K{p.energy_K}.bracket", PI2 / 16.0, mid,
                                 0.5 * s1.width, "rigorous bracket on SUM1 contains pi^2/16"))
    worst = 0.0
    for n in (1, 2, 3, 4):
        st = WellState(n)
        for l in range(-p.bridge_l, p.bridge_l + 1):
            gap = abs(discrete.probability(st, l) - 2 * math.pi * continuous.density(st, 2 * math.pi * l))
            worst = max(worst, gap)
    out.append(VerificationEntry(f"bridge.discrete_vs_sampled_density_l{p.bridge_l}", 0.0, worst, 1e-12,
                                 "periodic probability equals 2 pi times the density at xi = 2 pi l"))
    return out


def series_entries(p: Profile) -> list[VerificationEntry]:
    out = _bracket_entries(f"series.odd_squares_K{p.odd_K}", series.odd_squares_series(p.odd_K, False),
                           PI2 / 8.0, p.bracket_width, "sum of inverse odd squares equals pi^2/8")
    exact_gap = max(abs(series.exact_partial_sum(series.SUM1, K) - series.exact_partial_sum(series.SUM2, K)
                        - series.telescoped_difference(K)) for K in range(1, p.exact_K + 1))
    out.append(VerificationEntry(f"series.telescoping_exact_K{p.exact_K}", 0.0,
                                 float(Fraction(exact_gap)), 0.0,
                                 "SUM1 - SUM2 telescopes to 1/2 - 1/(2(2K+1)), rational arithmetic"))
    float_gap = max(abs(series.partial_sum(series.SUM1, K) - series.partial_sum(series.SUM2, K)
                        - (0.5 - 1.0 / (2 * (2 * K + 1)))) for K in p.float_Ks)
    out.append(VerificationEntry(f"series.telescoping_float_K{max(p.float_Ks)}", 0.0, float_gap,
                                 p.telescope_tol, "SUM1 - SUM2 telescopes, floating point"))
    out.append(series.verify_combination(1))
    out.append(series.verify_combination(10))
    out.append(series.verify_combination(min(p.exact_K, 100), exact=True))
    return out


def orthonormality_entries(p: Profile) -> list[VerificationEntry]:
    eye = np.eye(2 * p.gram_l + 1)
    g = orthonormality.periodic_gram(p.gram_l)
    gq = orthonormality.periodic_gram(p.gram_quad_l, quadrature=True)
    eye_q = np.eye(2 * p.gram_quad_l + 1)
    h = orthonormality.half_period_gram(range(1, 7))
    return [
        VerificationEntry(f"orthonormality.periodic_gram_l{p.gram_l}", 0.0,
                          float(np.max(np.abs(g - eye))), 1e-12,
                          "periodic basis is orthonormal on [0, L], closed form"),
        VerificationEntry(f"orthonormality.periodic_gram_quadrature_l{p.gram_quad_l}", 0.0,
                          float(np.max(np.abs(gq - eye_q))), 1e-12,
                          "periodic basis is orthonormal on [0, L], quadrature"),
        VerificationEntry("orthonormality.half_period_overlap_1_2", 2.0 / math.pi, float(abs(h[0, 1])), 1e-10,
                          "half-period exponentials overlap with modulus 2/pi"),
    ]


def run_suite(profile: str = "strict", perturb: float = 0.0) -> VerificationReport:
    """Run every check; ``perturb`` shifts each computed value as a negative control."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; choose from {sorted(PROFILES)}")
    p = PROFILES[profile]
    report = VerificationReport()
    report.extend(continuous_entries(p))
    report.extend(discrete_entries(p))
    report.extend(series_entries(p))
    report.extend(verify_reduction_chain(p.sinc_T, p.sinc_tol))
    report.extend(orthonormality_entries(p))
    if perturb:
        report.entries = [replace(e, computed=e.computed * (1.0 + perturb) + perturb)
                          for e in report.entries]
    return report
