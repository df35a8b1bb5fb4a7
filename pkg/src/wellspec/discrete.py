"""Momentum spectrum over the periodic basis exp(2 pi i l x / L) / sqrt(L).

A single signed index ``l`` labels the basis; its eigenvalue is
``p = 2 pi l hbar / L`` (``xi_l = 2 pi l``), so odd multiples of
``pi hbar / L`` never occur. Expansion coefficients of ``psi_n``:

* odd n:  ``c_l = -2 sqrt(2) n / (pi (2l - n)(2l + n))``, nonzero for all l
* even n: ``c_{+n/2} = -i/sqrt(2)``, ``c_{-n/2} = +i/sqrt(2)``, all others 0
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError, WellState, energy
from .quadrature import tail_inverse_square_difference
from .series import SUM1, SUM2, SeriesPartialSum, bracketed_sum

SQRT2 = math.sqrt(2.0)
GROUND = WellState(1)


@dataclass(frozen=True)
class DiscreteCoefficient:
    l: int
    xi: float
    amplitude: complex
    probability: float


def _check_l(l) -> int:
    if isinstance(l, bool) or int(l) != l:
        raise DomainError(f"basis index must be an integer, got {l!r}")
    return int(l)


def eigenvalue(l: int, state: WellState = GROUND) -> float:
    """Momentum eigenvalue ``2 pi l hbar / L`` of basis function ``l``."""
    return 2.0 * math.pi * _check_l(l) * state.hbar / state.L


def eigenvalue_xi(l: int) -> float:
    return 2.0 * math.pi * _check_l(l)


def basis_function(l: int, x, L: float = 1.0):
    """``exp(2 pi i l x / L) / sqrt(L)``."""
    return np.exp(2j * math.pi * _check_l(l) * np.asarray(x, dtype=float) / L) / math.sqrt(L)


def ground_state_amplitude(l: int) -> complex:
    l = _check_l(l)
    return complex(-2.0 * SQRT2 / (math.pi * ((2 * l - 1) * (2 * l + 1))))


def first_excited_expansion() -> list[DiscreteCoefficient]:
    """The two nonzero terms of ``psi_2 = (i/sqrt 2)(Xi_{-1} - Xi_{+1})``."""
    return [
        DiscreteCoefficient(-1, eigenvalue_xi(-1), 1j / SQRT2, 0.5),
        DiscreteCoefficient(1, eigenvalue_xi(1), -1j / SQRT2, 0.5),
    ]


def general_amplitude(state: WellState, l: int) -> complex:
    """Overlap of basis function ``l`` with ``psi_n`` (independent of L)."""
    l = _check_l(l)
    n = state.n
    if n % 2:
        # integer product first, so c_l and c_{-l} agree bit for bit
        return complex(-2.0 * SQRT2 * n / (math.pi * ((2 * l - n) * (2 * l + n))))
    if 2 * l == n:
        return -1j / SQRT2
    if 2 * l == -n:
        return 1j / SQRT2
    return 0j


def probability(state: WellState, l: int) -> float:
    l = _check_l(l)
    n = state.n
    if n % 2:
        return 8.0 * n * n / (math.pi ** 2 * ((2 * l - n) * (2 * l + n)) ** 2)
    return 0.5 if 2 * abs(l) == n else 0.0


def coefficient(state: WellState, l: int) -> DiscreteCoefficient:
    return DiscreteCoefficient(l, eigenvalue_xi(l), general_amplitude(state, l), probability(state, l))


def spectrum(state: WellState, l_max: int) -> list[DiscreteCoefficient]:
    """Coefficients for ``-l_max <= l <= l_max`` in ascending l."""
    if l_max < 0:
        raise DomainError("l_max must be non-negative")
    return [coefficient(state, l) for l in range(-l_max, l_max + 1)]


def _odd_tail_integral(n: int, K: float) -> float:
    """int_K^inf 8 n^2 / (pi^2 (4x^2 - n^2)^2) dx for 2K > n."""
    # substitute u = 2x
    return 8.0 * n * n / math.pi ** 2 * 0.5 * tail_inverse_square_difference(n, 2.0 * K)


def probability_sum(K: int, state: WellState = GROUND) -> SeriesPartialSum:
    """``sum_{|l| <= K} |c_l|^2`` with a two-sided bracket on the rest.

    For the ground state this is ``8/pi^2 (1 + 2 SUM2(K))``, so the limit 1
    is the same statement as ``1/2 + SUM2 = pi^2/16``.
    """
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ValueError("K must be a positive integer")
    K = int(K)
    n = state.n
    if n == 1:
        return bracketed_sum(SUM2, K).scaled(16.0 / math.pi ** 2).shifted(8.0 / math.pi ** 2)
    if n % 2 == 0:
        value = 1.0 if K >= n // 2 else 0.0
        rest = 1.0 - value
        return SeriesPartialSum(K, value, rest, rest, None)
    # terms decrease once 2l > n; sum any earlier ones into the bracket explicitly
    m0 = max(K, (n + 1) // 2)
    ls = np.arange(1, K + 1)
    value = math.fsum(np.concatenate([[probability(state, 0)],
                                      2.0 * 8.0 * n * n / (math.pi ** 2 * (4.0 * ls * ls - n * n) ** 2)]))
    extra = math.fsum(2.0 * probability(state, l) for l in range(K + 1, m0 + 1))
    slack = 4.0 * 2.0 ** -52 * value
    lower = extra + 2.0 * _odd_tail_integral(n, m0 + 1) - slack
    upper = extra + 2.0 * _odd_tail_integral(n, m0) + slack
    return SeriesPartialSum(K, value, lower, upper, None)


def energy_expectation_sum(K: int, state: WellState = GROUND) -> SeriesPartialSum:
    """``<H>`` of the ground state summed over the periodic spectrum up to ``|l| <= K``.

    Equals ``2 sum_k (2k)^2 E_1 |c_k|^2 = (16/pi^2) E_1 SUM1(K)``; the limit
    ``E_1`` is the same statement as ``SUM1 = pi^2/16``. The tail is O(1/K),
    so a Richardson estimate from K and 2K is attached.
    """
    if state.n != 1:
        raise DomainError("energy expectation series is defined for the ground state")
    return bracketed_sum(SUM1, K).scaled(16.0 / math.pi ** 2 * energy(state))


def momentum_expectation(state: WellState, l_max: int) -> float:
    """Symmetric partial sum of ``xi_l |c_l|^2``; exactly zero by pairing."""
    total = 0.0
    for l in range(1, l_max + 1):
        total += eigenvalue_xi(l) * probability(state, l) + eigenvalue_xi(-l) * probability(state, -l)
    return total


def reconstruct(state: WellState, x, K: int) -> np.ndarray:
    """Truncated expansion ``sum_{|l| <= K} c_l Xi_l(x)`` (complex)."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape, dtype=complex)
    for l in range(-K, K + 1):
        c = general_amplitude(state, l)
        if c != 0:
            out += c * basis_function(l, x, state.L)
    return out
