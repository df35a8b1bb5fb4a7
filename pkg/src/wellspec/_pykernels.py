"""Numpy fallback for the compiled kernels in ``_ckernels.pyx``."""

import math

import numpy as np

TAYLOR_WINDOW = 1e-4

ODD_SQUARES = 0
SUM1 = 1
SUM2 = 2


def density_array(n, xi):
    x = np.asarray(xi, dtype=float)
    a = n * math.pi
    ax = np.abs(x)
    eps = ax - a
    pref = 4.0 * n * n * math.pi
    s = np.cos(0.5 * ax) if n % 2 else np.sin(0.5 * ax)
    d = (ax - a) * (ax + a)
    near = np.abs(eps) < TAYLOR_WINDOW
    with np.errstate(divide="ignore", invalid="ignore"):
        raw = pref * s * s / (d * d)
    e2 = eps * eps
    q = 0.25 - e2 / 48.0 + e2 * e2 / 1440.0
    taylor = pref * q / ((ax + a) * (ax + a))
    return np.where(near, taylor, raw)


def _terms(kind, K):
    k = np.arange(1, K + 1, dtype=float)
    u = 2.0 * k - 1.0
    if kind == ODD_SQUARES:
        return 1.0 / (u * u)
    uv = u * (2.0 * k + 1.0)
    if kind == SUM1:
        return 4.0 * k * k / (uv * uv)
    if kind == SUM2:
        return 1.0 / (uv * uv)
    raise ValueError(f"unknown series kind {kind}")


def series_sum(kind, K):
    # fsum is correctly rounded, at least as good as the compiled Neumaier loop
    return math.fsum(_terms(kind, K))
