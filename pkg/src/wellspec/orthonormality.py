"""Inner products of the two candidate momentum bases on [0, L].

``Xi_l = exp(2 pi i l x / L) / sqrt(L)`` satisfies the periodic boundary
condition and is orthonormal. The half-period set
``Phi_l = i exp(i pi l x / L) / sqrt(L)`` consists of momentum
eigenfunctions too, but functions whose indices differ by an odd number
overlap with modulus ``2 / (pi |m - l|)``.

Every product has a closed-form path and an independent quadrature path.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .quadrature import integrate


def _phase_integral(k: int, mult: float) -> complex:
    """(1/L) int_0^L exp(i mult k pi x / L) dx, written as the explicit antiderivative."""
    if k == 0:
        return 1.0 + 0j
    theta = mult * k * math.pi
    return (cmath.exp(1j * theta) - 1.0) / (1j * theta)


def periodic_inner_product(l: int, m: int) -> complex:
    """<Xi_l | Xi_m> from the antiderivative ``[exp(2 i (m-l) pi) - 1] / (2 i (m-l) pi)``."""
    return _phase_integral(m - l, 2.0)


def half_period_inner_product(l: int, m: int) -> complex:
    """<Phi_l | Phi_m>; the factors of ``i`` cancel in the product."""
    return _phase_integral(m - l, 1.0)


def _quad_phase(k: int, mult: float, L: float, tol: float) -> complex:
    w = mult * k * math.pi / L
    re = integrate(lambda x: np.cos(w * x), 0.0, L, tol=tol)
    im = integrate(lambda x: np.sin(w * x), 0.0, L, tol=tol)
    return complex(re.value, im.value) / L


def periodic_inner_product_quadrature(l: int, m: int, L: float = 1.0, tol: float = 1e-14) -> complex:
    return _quad_phase(m - l, 2.0, L, tol)


def half_period_inner_product_quadrature(l: int, m: int, L: float = 1.0, tol: float = 1e-14) -> complex:
    return _quad_phase(m - l, 1.0, L, tol)


def gram_matrix(indices, product) -> np.ndarray:
    idx = list(indices)
    return np.array([[product(l, m) for m in idx] for l in idx], dtype=complex)


def periodic_gram(l_max: int = 10, quadrature: bool = False) -> np.ndarray:
    product = periodic_inner_product_quadrature if quadrature else periodic_inner_product
    return gram_matrix(range(-l_max, l_max + 1), product)


def half_period_gram(indices=range(1, 7), quadrature: bool = False) -> np.ndarray:
    product = half_period_inner_product_quadrature if quadrature else half_period_inner_product
    return gram_matrix(indices, product)
