"""Partial sums of the odd-square series and its two rearrangements.

Three positive-term series, all tied to pi^2:

* odd squares ``sum 1/(2k-1)^2 -> pi^2/8``
* ``SUM1 = sum (2k)^2 / ((2k-1)^2 (2k+1)^2) -> pi^2/16``
* ``SUM2 = sum 1 / ((2k-1)^2 (2k+1)^2) -> pi^2/16 - 1/2``

Each partial sum carries a two-sided tail bracket from integral
comparison (the terms decrease for k >= 1), so ``value + tail_lower <=
limit <= value + tail_upper``. Brackets are widened by a few ulps of the
partial sum to cover rounding. An optional Richardson estimate is kept
separate from the bracket.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._backend import kernels
from .quadrature import _series_g
from .report import VerificationEntry

ODD_SQUARES = "odd_squares"
SUM1 = "sum1"
SUM2 = "sum2"

_KIND_CODE = {ODD_SQUARES: kernels.ODD_SQUARES, SUM1: kernels.SUM1, SUM2: kernels.SUM2}
_ROUNDING = 4.0 * 2.0 ** -52


@dataclass(frozen=True)
class SeriesPartialSum:
    K: int
    value: float
    tail_lower: float
    tail_upper: float
    extrapolated: float | None = None

    @property
    def lower(self) -> float:
        return self.value + self.tail_lower

    @property
    def upper(self) -> float:
        return self.value + self.tail_upper

    @property
    def width(self) -> float:
        return self.tail_upper - self.tail_lower

    def brackets(self, x: float) -> bool:
        return self.lower <= x <= self.upper

    def scaled(self, factor: float) -> "SeriesPartialSum":
        """Same series multiplied by a positive constant."""
        ext = None if self.extrapolated is None else factor * self.extrapolated
        return SeriesPartialSum(self.K, factor * self.value, factor * self.tail_lower,
                                factor * self.tail_upper, ext)

    def shifted(self, offset: float) -> "SeriesPartialSum":
        ext = None if self.extrapolated is None else self.extrapolated + offset
        return SeriesPartialSum(self.K, self.value + offset, self.tail_lower, self.tail_upper, ext)


def _check_K(K) -> int:
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise ValueError(f"K must be a positive integer, got {K!r}")
    return int(K)


def term(kind: str, k: int) -> Fraction:
    """Exact k-th term, for the rational oracle."""
    u, v = 2 * k - 1, 2 * k + 1
    if kind == ODD_SQUARES:
        return Fraction(1, u * u)
    if kind == SUM1:
        return Fraction(4 * k * k, (u * v) ** 2)
    if kind == SUM2:
        return Fraction(1, (u * v) ** 2)
    raise ValueError(f"unknown series {kind!r}")


def exact_partial_sum(kind: str, K: int) -> Fraction:
    """Partial sum in rational arithmetic (intended for K up to a few hundred)."""
    K = _check_K(K)
    return sum((term(kind, k) for k in range(1, K + 1)), Fraction(0))


def partial_sum(kind: str, K: int) -> float:
    """Compensated floating partial sum over k = 1..K."""
    return kernels.series_sum(_KIND_CODE[kind], _check_K(K))


def tail_integral(kind: str, K: float) -> float:
    """int_K^inf of the term function; upper tail bound from K, lower from K+1."""
    if kind == ODD_SQUARES:
        return 1.0 / (2.0 * (2.0 * K - 1.0))
    t = 1.0 / (2.0 * K)
    # int 1/(4x^2-1)^2 = (1/4) sum_j 2j/(2j+1) t^(2j+1)
    sum2_tail = 0.25 * t * _series_g(t)
    if kind == SUM2:
        return sum2_tail
    if kind == SUM1:
        # 4x^2/(4x^2-1)^2 = 1/(4x^2-1) + 1/(4x^2-1)^2
        return 0.5 * math.atanh(t) + sum2_tail
    raise ValueError(f"unknown series {kind!r}")


def richardson(s_k: float, s_2k: float, order: int) -> float:
    """Cancel a c/K**order error term from partial sums at K and 2K."""
    f = 2.0 ** order
    return (f * s_2k - s_k) / (f - 1.0)


_ERROR_ORDER = {ODD_SQUARES: 1, SUM1: 1, SUM2: 3}


def bracketed_sum(kind: str, K: int, extrapolate: bool = True) -> SeriesPartialSum:
    K = _check_K(K)
    value = partial_sum(kind, K)
    slack = _ROUNDING * abs(value)
    lower = tail_integral(kind, K + 1) - slack
    upper = tail_integral(kind, K) + slack
    ext = None
    if extrapolate:
        ext = richardson(value, partial_sum(kind, 2 * K), _ERROR_ORDER[kind])
    return SeriesPartialSum(K, value, lower, upper, ext)


def odd_squares_series(K: int, extrapolate: bool = True) -> SeriesPartialSum:
    """sum_{k=1}^K 1/(2k-1)^2, converging slowly to pi^2/8."""
    return bracketed_sum(ODD_SQUARES, K, extrapolate)


def sum1(K: int, extrapolate: bool = True) -> SeriesPartialSum:
    return bracketed_sum(SUM1, K, extrapolate)


def sum2(K: int, extrapolate: bool = True) -> SeriesPartialSum:
    return bracketed_sum(SUM2, K, extrapolate)


def telescoped_difference(K: int) -> Fraction:
    """Closed form of SUM1(K) - SUM2(K) = 1/2 - 1/(2(2K+1))."""
    return Fraction(1, 2) - Fraction(1, 2 * (2 * K + 1))


def combination_residual(K: int, exact: bool = False):
    """``1 - 2 (SUM1(K) - SUM2(K))``; the finite-K gap in ``1 + 2 SUM1 + 2 SUM2 = 4 SUM1``."""
    if exact:
        return 1 - 2 * (exact_partial_sum(SUM1, K) - exact_partial_sum(SUM2, K))
    return 1.0 - 2.0 * (partial_sum(SUM1, K) - partial_sum(SUM2, K))


def verify_combination(K: int, exact: bool = False) -> VerificationEntry:
    """Check the residual of the combination identity equals ``1/(2K+1)``."""
    K = _check_K(K)
    expected = Fraction(1, 2 * K + 1)
    computed = combination_residual(K, exact)
    if exact:
        # exact difference, so any transcription error shows up as nonzero
        return VerificationEntry(f"series.combination_residual_exact_K{K}", 0.0,
                                 float(computed - expected), 0.0,
                                 "odd-square series split into SUM1 and SUM2, rational arithmetic")
    return VerificationEntry(f"series.combination_residual_K{K}", float(expected), computed, 1e-14,
                             "odd-square series split into SUM1 and SUM2")
