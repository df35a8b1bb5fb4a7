"""Adaptive Gauss-Kronrod integration and the sinc-squared reduction chain.

The engine works on vectorised integrands: ``f`` receives a 1-D float
array and must return an array of the same shape. Removable
singularities must already be filled in by the caller.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .report import VerificationEntry

# 7-point Gauss / 15-point Kronrod pair (QUADPACK qk15), nodes on [0, 1]
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full symmetric layout on [-1, 1]
NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    error_estimate: float
    converged: bool
    truncation: float = math.inf
    tail_correction: float = 0.0
    function_evaluations: int = 0

    @property
    def raw_value(self) -> float:
        """Value over the truncated range, without the analytic tail."""
        return self.value - self.tail_correction


def _kronrod_panels(f, left, right):
    center = 0.5 * (left + right)
    half = 0.5 * (right - left)
    x = center[:, None] + half[:, None] * NODES[None, :]
    fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
    if not np.all(np.isfinite(fx)):
        raise FloatingPointError("integrand returned non-finite values")
    kron = half * (fx @ KRONROD_WEIGHTS)
    gauss = half * (fx @ GAUSS_WEIGHTS)
    habs = np.abs(half)
    resabs = habs * (np.abs(fx) @ KRONROD_WEIGHTS)
    mean = (fx @ KRONROD_WEIGHTS) * 0.5
    resasc = habs * (np.abs(fx - mean[:, None]) @ KRONROD_WEIGHTS)
    err = np.abs(kron - gauss)
    scale = np.ones_like(err)
    mask = (resasc != 0.0) & (err != 0.0)
    scale[mask] = np.minimum(1.0, (200.0 * err[mask] / resasc[mask]) ** 1.5)
    err = np.where(mask, resasc * scale, err)
    floor = 50.0 * _EPS * resabs
    err = np.where(resabs > _TINY / (50.0 * _EPS), np.maximum(err, floor), err)
    return kron, err


def _initial_edges(a, b, period, breakpoints):
    pts = [a, b]
    if period is not None:
        if period <= 0:
            raise ValueError("period must be positive")
        lo = math.ceil(a / period)
        hi = math.floor(b / period)
        if hi - lo > 5_000_000:
            raise ValueError("period partition too fine for the interval")
        pts.extend(np.arange(lo, hi + 1) * period)
    if breakpoints is not None:
        pts.extend(float(p) for p in breakpoints)
    edges = np.unique(np.asarray(pts, dtype=float))
    return edges[(edges >= a) & (edges <= b)]


def integrate(f, a, b, tol=1e-10, *, period=None, breakpoints=None,
              max_intervals=500_000) -> QuadratureResult:
    """Globally adaptive G7/K15 quadrature of ``f`` over ``[a, b]``.

    ``tol`` is an absolute tolerance on the summed per-panel error
    estimates. ``period`` seeds the partition at multiples of the period,
    which keeps oscillatory integrands from confusing the error estimate.
    An interval is bisected while its error exceeds its length-weighted
    share of ``tol``. If the interval budget runs out the best estimate is
    returned with ``converged=False``.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
        raise ValueError(f"need finite a < b, got [{a}, {b}]")
    if not tol > 0:
        raise ValueError("tol must be positive")

    edges = _initial_edges(a, b, period, breakpoints)
    left, right = edges[:-1], edges[1:]
    vals, errs = _kronrod_panels(f, left, right)
    nevals = 15 * left.size
    width = b - a
    min_width = 64.0 * _EPS * max(abs(a), abs(b), width)
    converged = False

    while True:
        total_err = math.fsum(errs)
        if total_err <= tol:
            converged = True
            break
        share = tol * (right - left) / width
        split = (errs > share) & ((right - left) > min_width)
        if not split.any() or left.size + split.sum() > max_intervals:
            break
        mid = 0.5 * (left[split] + right[split])
        new_left = np.concatenate([left[split], mid])
        new_right = np.concatenate([mid, right[split]])
        nv, ne = _kronrod_panels(f, new_left, new_right)
        nevals += 15 * new_left.size
        keep = ~split
        left = np.concatenate([left[keep], new_left])
        right = np.concatenate([right[keep], new_right])
        vals = np.concatenate([vals[keep], nv])
        errs = np.concatenate([errs[keep], ne])
        order = np.argsort(left, kind="stable")
        left, right, vals, errs = left[order], right[order], vals[order], errs[order]

    return QuadratureResult(
        value=math.fsum(vals),
        error_estimate=math.fsum(errs),
        converged=converged,
        function_evaluations=int(nevals),
    )


# ---------------------------------------------------------------------------
# analytic tails
# ---------------------------------------------------------------------------

def _series_g(t):
    """sum_{j>=1} 2j/(2j+1) t^(2j)."""
    total, power, j = 0.0, 1.0, 1
    t2 = t * t
    while True:
        power *= t2
        term = 2 * j / (2 * j + 1) * power
        total += term
        if term < 1e-18 * total:
            return total
        j += 1


def _series_h(t):
    """atanh(t)/t = sum_{j>=0} t^(2j)/(2j+1)."""
    total, power, j = 0.0, 1.0, 0
    t2 = t * t
    while True:
        term = power / (2 * j + 1)
        total += term
        if term < 1e-18 * total:
            return total
        power *= t2
        j += 1


def tail_inverse_square_difference(a, T):
    """Closed form of int_T^inf dx / (x^2 - a^2)^2 for T > a >= 0."""
    if a == 0:
        return 1.0 / (3.0 * T ** 3)
    t = a / T
    if not t < 1:
        raise ValueError("need T > a")
    return _series_g(t) / (2.0 * a * a * T)


def tail_square_over_square_difference(a, T):
    """Closed form of int_T^inf x^2 / (x^2 - a^2)^2 dx for T > a >= 0."""
    if a == 0:
        return 1.0 / T
    t = a / T
    if not t < 1:
        raise ValueError("need T > a")
    return (_series_h(t) + 0.5 * _series_g(t)) / T


def even_oscillatory_tail(amp, damp, amp_tail, omega, sign, T):
    """Two-sided tail of ``amp(x) * (1 + sign*cos(omega x)) / 2`` beyond ``|x| = T``.

    ``amp`` is even and decays with ``amp''`` of one sign on ``[T, inf)``;
    ``amp_tail`` is ``int_T^inf amp``. The oscillatory part is taken to two
    integrations by parts; the remainder is bounded by ``|amp'(T)|/omega^2``.
    Returns ``(tail, bound)``.
    """
    osc = -amp(T) * math.sin(omega * T) / omega - damp(T) * math.cos(omega * T) / omega ** 2
    bound = abs(damp(T)) / omega ** 2
    return amp_tail + sign * osc, bound


def _with_tail(raw: QuadratureResult, T, tail, bound, tol):
    err = raw.error_estimate + bound
    return QuadratureResult(
        value=raw.value + tail,
        error_estimate=err,
        converged=raw.converged and err <= tol,
        truncation=T,
        tail_correction=tail,
        function_evaluations=raw.function_evaluations,
    )


# ---------------------------------------------------------------------------
# sinc^2 and the change-of-variable chain
# ---------------------------------------------------------------------------

def sinc_squared(x):
    """sin(x)^2 / x^2 with the value 1 at the origin."""
    return np.sinc(np.asarray(x, dtype=float) / np.pi) ** 2


def sinc_squared_integral(T=1e3 * math.pi, tol=1e-8) -> QuadratureResult:
    """Integral of sin^2 x / x^2 over the real line, truncated at ``T`` plus tail."""
    if not T >= 10 * math.pi:
        raise ValueError("truncation must be at least 10*pi")
    raw = integrate(sinc_squared, -T, T, tol=0.5 * tol, period=math.pi)
    tail, bound = even_oscillatory_tail(
        lambda x: 1.0 / x ** 2, lambda x: -2.0 / x ** 3, 1.0 / T,
        omega=2.0, sign=-1.0, T=T,
    )
    return _with_tail(raw, T, tail, bound, tol)


def _g_norm(z):
    z = np.abs(np.asarray(z, dtype=float))
    return math.pi ** 2 * np.sinc((1.0 - z) / 2.0) ** 2 / (z + 1.0) ** 2


def _g_second(z):
    return np.asarray(z, dtype=float) ** 2 * _g_norm(z)


def _g_halfsum(z):
    z = np.asarray(z, dtype=float)
    return 0.25 * math.pi ** 2 * (np.sinc((z + 1.0) / 2.0) ** 2 + np.sinc((z - 1.0) / 2.0) ** 2)


def _g_shifted(z):
    return 0.5 * math.pi ** 2 * np.sinc(np.asarray(z, dtype=float) / 2.0) ** 2


def _chain_integral(g, amp, damp, amp_tail, omega, sign, T, tol, period):
    raw = integrate(g, -T, T, tol=0.5 * tol, period=period)
    tail, bound = even_oscillatory_tail(amp, damp, amp_tail, omega, sign, T)
    return _with_tail(raw, T, tail, bound, tol)


def reduction_chain(T=1e3 * math.pi, tol=1e-8) -> dict[str, QuadratureResult]:
    """Evaluate every rewriting of the ground-state normalisation integral.

    Keys: ``normalization_z`` and ``second_moment_z`` (both target pi^2 in
    the rescaled variable ``z = xi/pi``), ``half_sum`` (their average
    written as two shifted poles), ``shifted_sinc`` (after the change of
    variable, 2 * int sin^2(pi y/2)/y^2) and ``sinc`` (int sin^2 x / x^2,
    target pi).
    """
    if not T >= 10 * math.pi:
        raise ValueError("truncation must be at least 10*pi")
    out = {}
    out["normalization_z"] = _chain_integral(
        _g_norm,
        lambda z: 4.0 / (z * z - 1.0) ** 2,
        lambda z: -16.0 * z / (z * z - 1.0) ** 3,
        4.0 * tail_inverse_square_difference(1.0, T),
        math.pi, 1.0, T, tol, 1.0,
    )
    out["second_moment_z"] = _chain_integral(
        _g_second,
        lambda z: 4.0 * z * z / (z * z - 1.0) ** 2,
        lambda z: -8.0 * z * (z * z + 1.0) / (z * z - 1.0) ** 3,
        4.0 * tail_square_over_square_difference(1.0, T),
        math.pi, 1.0, T, tol, 1.0,
    )
    out["half_sum"] = _chain_integral(
        _g_halfsum,
        lambda z: 2.0 * (1.0 + z * z) / (z * z - 1.0) ** 2,
        lambda z: -4.0 * z * (z * z + 3.0) / (z * z - 1.0) ** 3,
        2.0 * (tail_inverse_square_difference(1.0, T) + tail_square_over_square_difference(1.0, T)),
        math.pi, 1.0, T, tol, 1.0,
    )
    out["shifted_sinc"] = _chain_integral(
        _g_shifted,
        lambda y: 2.0 / y ** 2,
        lambda y: -4.0 / y ** 3,
        2.0 / T,
        math.pi, -1.0, T, tol, 1.0,
    )
    out["sinc"] = sinc_squared_integral(T, tol)
    return out


def verify_reduction_chain(T=1e3 * math.pi, tol=1e-8) -> list[VerificationEntry]:
    """Report entries for each step of the chain ending at int sin^2 x/x^2 = pi."""
    r = reduction_chain(T, tol)
    pi2 = math.pi ** 2
    norm, second, half = r["normalization_z"], r["second_moment_z"], r["half_sum"]
    shifted, sinc = r["shifted_sinc"], r["sinc"]
    avg = 0.5 * (norm.value + second.value)
    return [
        VerificationEntry("chain.normalization_z", pi2, norm.value, 1e-4,
                          "normalisation integral rescaled to z = xi/pi"),
        VerificationEntry("chain.second_moment_z", pi2, second.value, 1e-4,
                          "second-moment integral rescaled to z = xi/pi"),
        VerificationEntry("chain.half_sum", pi2, half.value, 1e-4,
                          "average of the two rescaled integrals as shifted double poles"),
        VerificationEntry("chain.half_sum_vs_average", avg, half.value,
                          max(half.error_estimate + 0.5 * (norm.error_estimate + second.error_estimate), 1e-12),
                          "direct half-sum equals the average of its two parts"),
        VerificationEntry("chain.shifted_sinc", pi2, shifted.value, 1e-4,
                          "change of variable to 2*int sin^2(pi y/2)/y^2"),
        VerificationEntry("chain.half_sum_vs_shifted_sinc", shifted.value, half.value,
                          max(half.error_estimate + shifted.error_estimate, 1e-12),
                          "shifting each pole to the origin leaves the integral unchanged"),
        VerificationEntry("chain.sinc", math.pi, sinc.value, 1e-6,
                          "int sin^2 x / x^2 over the real line"),
        VerificationEntry("chain.sinc_vs_shifted", shifted.value, math.pi * sinc.value,
                          max(shifted.error_estimate + math.pi * sinc.error_estimate, 1e-12),
                          "rescaling x = pi y / 2 maps one form onto the other"),
    ]
