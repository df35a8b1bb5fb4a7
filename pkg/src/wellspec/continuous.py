"""Momentum-space wave function of a well eigenstate over the continuous spectrum.

With plane waves ``exp(ikx)/sqrt(2 pi)`` the amplitude per unit
``xi = kL`` is

    c_n(xi) = n pi (1 - (-1)^n exp(-i xi)) / (sqrt(pi) (n^2 pi^2 - xi^2))

and the density ``|c_n(xi)|^2`` is

    4 n^2 pi cos^2(xi/2) / (xi^2 - n^2 pi^2)^2    (odd n)
    4 n^2 pi sin^2(xi/2) / (xi^2 - n^2 pi^2)^2    (even n)

with the finite value ``1/(4 pi)`` at ``xi = +-n pi``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from ._backend import kernels
from .core import DomainError, SpectralSample, WellState
from .quadrature import (
    QuadratureResult,
    _with_tail,
    even_oscillatory_tail,
    integrate,
    tail_inverse_square_difference,
    tail_square_over_square_difference,
)

TAYLOR_WINDOW = 1e-4
DEFAULT_TRUNCATION = 1e4 * math.pi
DIVERGENCE_GROWTH = 1.5
DIVERGENCE_DOUBLINGS = 3


@dataclass(frozen=True)
class ContinuousCoefficient:
    xi: float
    value: complex

    @property
    def probability_density(self) -> float:
        return abs(self.value) ** 2


@dataclass(frozen=True)
class Divergent:
    """A moment integral that keeps growing as the truncation is doubled."""

    power: int
    truncations: tuple[float, ...]
    values: tuple[float, ...]
    growth: tuple[float, ...]


def _check_xi(xi):
    x = np.asarray(xi, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("xi must be finite")
    return x


def coefficient(state: WellState, xi: float) -> complex:
    """Continuous-spectrum amplitude ``c_n(xi)`` normalised per unit xi."""
    x = float(_check_xi(xi))
    n = state.n
    a = n * math.pi
    for s in (1.0, -1.0):
        eps = x - s * a
        if abs(eps) < TAYLOR_WINDOW:
            # (1 - exp(-i eps)) / eps, expanded
            e2 = eps * eps
            ratio = complex(0.5 * eps - eps * e2 / 24.0, 1.0 - e2 / 6.0 + e2 * e2 / 120.0)
            return a * ratio / (-s * (2.0 * a + s * eps)) / math.sqrt(math.pi)
    phase = -1.0 if n % 2 else 1.0
    numer = 1.0 - phase * complex(math.cos(x), -math.sin(x))
    return a * numer / ((a - x) * (a + x)) / math.sqrt(math.pi)


def density(state: WellState, xi):
    """Probability density per unit xi; scalar in, float out; array in, array out."""
    x = _check_xi(xi)
    out = kernels.density_array(state.n, x)
    if np.ndim(out) == 0:
        return float(out)
    return out


def density_grid(state: WellState, xi, threads: int = 1) -> np.ndarray:
    """Density on a 1-D grid, optionally split across threads in fixed chunks."""
    x = np.ascontiguousarray(_check_xi(xi)).ravel()
    if threads <= 1 or x.size < 4096:
        return kernels.density_array(state.n, x)
    chunks = np.array_split(x, threads)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda c: kernels.density_array(state.n, c), chunks))
    return np.concatenate(parts)


def sample(state: WellState, xi: float) -> SpectralSample:
    return SpectralSample(float(xi), density(state, xi))


def _symmetric_grid(halfwidth, step):
    m = int(math.ceil(halfwidth / step))
    h = np.arange(m + 1) * (halfwidth / m)
    return np.concatenate([-h[:0:-1], h])


def _slope_numerator(state: WellState, x: float) -> float:
    """Same sign as d(density)/dxi times (xi^2 - a^2)^3; zero at stationary points."""
    a = state.n * math.pi
    half = math.sin(x) / 2.0
    if state.is_even:
        return half * (x * x - a * a) - 4.0 * x * math.sin(x / 2.0) ** 2
    return -half * (x * x - a * a) - 4.0 * x * math.cos(x / 2.0) ** 2


def peak_locations(state: WellState, search_halfwidth: float | None = None,
                   step: float = 1e-3, xtol: float = 1e-10) -> list[float]:
    """Positions of the global maxima of the density.

    A symmetric grid scan over ``[-W, W]`` picks every local maximum within
    a relative 1e-6 of the largest sample. Each is refined to ``xtol`` by a
    bracketed root search on the derivative numerator, or bounded Brent if
    the bracket has no sign change. Refined maxima whose heights agree to
    1e-9 are all returned, sorted. A maximum within ``10*xtol`` of the origin is
    reported as exactly 0 (the density is even).
    """
    W = 2 * state.n * math.pi if search_halfwidth is None else float(search_halfwidth)
    if W < 2 * state.n * math.pi:
        raise DomainError("search_halfwidth must be at least 2*n*pi")
    if not 0 < step <= 1e-3:
        raise DomainError("grid step must be in (0, 1e-3]")
    x = _symmetric_grid(W, step)
    d = density_grid(state, x)
    top = d.max()
    interior = np.arange(1, x.size - 1)
    is_peak = (d[interior] >= d[interior - 1]) & (d[interior] >= d[interior + 1])
    candidates = interior[is_peak & (d[interior] >= top * (1 - 1e-6))]

    refined = []
    for i in candidates:
        lo, hi = x[i - 1], x[i + 1]
        def h(t):
            return _slope_numerator(state, t)
        if h(lo) * h(hi) < 0:
            loc = brentq(h, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)
        else:
            res = minimize_scalar(lambda t: -density(state, t), bounds=(lo, hi),
                                  method="bounded", options={"xatol": xtol})
            loc = float(res.x)
        refined.append((float(loc), density(state, loc)))
    best = max(v for _, v in refined)
    peaks = []
    for loc, val in sorted(refined):
        if val < best * (1 - 1e-9):
            continue
        if abs(loc) <= 10 * xtol:
            loc = 0.0
        if peaks and abs(loc - peaks[-1]) <= 10 * xtol:
            continue
        peaks.append(loc)
    return peaks


def _amplitude_factors(state: WellState, power: int):
    """Non-oscillating envelope of density * xi^power, its derivative and tail integral."""
    n = state.n
    a = n * math.pi
    c = 4.0 * n * n * math.pi
    if power == 0:
        return (lambda x: c / (x * x - a * a) ** 2,
                lambda x: -4.0 * c * x / (x * x - a * a) ** 3,
                lambda T: c * tail_inverse_square_difference(a, T))
    if power == 2:
        return (lambda x: c * x * x / (x * x - a * a) ** 2,
                lambda x: -2.0 * c * x * (x * x + a * a) / (x * x - a * a) ** 3,
                lambda T: c * tail_square_over_square_difference(a, T))
    raise ValueError("analytic tail only for power 0 or 2")


def _truncated_moment(state, power, T, tol):
    if power == 0:
        f = lambda x: kernels.density_array(state.n, x)
    else:
        f = lambda x: kernels.density_array(state.n, x) * x ** power
    return integrate(f, -T, T, tol=tol, period=math.pi)


def _tail_corrected(state, power, T, tol):
    if not T >= 10 * state.n * math.pi:
        raise DomainError("truncation must be at least 10*n*pi")
    raw = _truncated_moment(state, power, T, 0.5 * tol)
    amp, damp, amp_tail = _amplitude_factors(state, power)
    sign = -1.0 if state.is_even else 1.0
    tail, bound = even_oscillatory_tail(amp, damp, amp_tail(T), 1.0, sign, T)
    return _with_tail(raw, T, tail, bound, tol)


def normalization(state: WellState, truncation: float = DEFAULT_TRUNCATION,
                  tol: float = 1e-9) -> QuadratureResult:
    """Total probability: integral of the density over ``[-T, T]`` plus analytic tail."""
    return _tail_corrected(state, 0, truncation, tol)


def odd_moment(state: WellState, power: int) -> float:
    """Odd momentum moments vanish because the density is even."""
    if power < 1 or power % 2 == 0:
        raise DomainError("power must be a positive odd integer")
    return 0.0


def moment(state: WellState, power: int, truncation: float = DEFAULT_TRUNCATION,
           tol: float = 1e-8) -> QuadratureResult | Divergent:
    """``<xi^power>`` over the continuous spectrum.

    ``power = 2`` gives ``(n pi)^2`` (multiply by ``(hbar/L)^2`` for
    ``<p^2>``). For ``power >= 4`` the integrand does not decay and the
    truncated integral is doubled three times; growth by more than
    ``DIVERGENCE_GROWTH`` at every doubling returns :class:`Divergent`.
    If the growth test does not trigger, the last truncated value is
    returned unconverged.
    """
    if isinstance(power, bool) or int(power) != power or power < 2 or power % 2:
        raise DomainError("moment needs an even power >= 2; see odd_moment for odd powers")
    power = int(power)
    if power == 2:
        return _tail_corrected(state, 2, truncation, tol)
    return divergence_test(state, power, truncation)


def divergence_test(state: WellState, power: int, truncation: float,
                    doublings: int = DIVERGENCE_DOUBLINGS,
                    growth: float = DIVERGENCE_GROWTH) -> QuadratureResult | Divergent:
    T = float(truncation)
    f = lambda x: kernels.density_array(state.n, x) * x ** power
    first = integrate(f, -T, T, tol=1e-8 * max(1.0, T), period=math.pi)
    values = [first.value]
    Ts = [T]
    nevals = first.function_evaluations
    for _ in range(doublings):
        lo, hi = Ts[-1], 2 * Ts[-1]
        # add the two new shells instead of redoing the whole range
        shell = integrate(f, lo, hi, tol=1e-8 * hi, period=math.pi)
        nevals += 2 * shell.function_evaluations
        values.append(values[-1] + 2.0 * shell.value)
        Ts.append(hi)
    ratios = tuple(values[i + 1] / values[i] for i in range(doublings))
    if all(r > growth for r in ratios):
        return Divergent(power, tuple(Ts), tuple(values), ratios)
    return QuadratureResult(values[-1], math.inf, False, Ts[-1], 0.0, nevals)


def bin_integral(state: WellState, lo: float, hi: float, tol: float = 1e-13) -> float:
    """Probability of measuring xi in ``[lo, hi]``."""
    res = integrate(lambda x: kernels.density_array(state.n, x), lo, hi, tol=tol, period=math.pi)
    return res.value
