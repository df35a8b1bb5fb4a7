"""Stationary states of the 1D infinite square well.

All spectral quantities downstream are expressed in the dimensionless
momentum ``xi = k L = p L / hbar``, so they do not depend on ``L``,
``hbar`` or ``mass``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """Argument outside the domain where a quantity is defined."""


@dataclass(frozen=True)
class WellState:
    """Eigenstate ``n`` of a well of width ``L`` (natural units by default)."""

    n: int
    L: float = 1.0
    hbar: float = 1.0
    mass: float = 1.0

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise DomainError(f"quantum number must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        for name in ("L", "hbar", "mass"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")

    @property
    def is_even(self) -> bool:
        return self.n % 2 == 0

    @property
    def classical_xi(self) -> float:
        """Classical bounce momentum ``n*pi`` in xi units."""
        return self.n * math.pi

    @property
    def classical_momentum(self) -> float:
        return self.n * math.pi * self.hbar / self.L


@dataclass(frozen=True)
class SpectralSample:
    xi: float
    density: float


def psi(state: WellState, x):
    """Position-space eigenfunction ``sqrt(2/L) sin(n pi x / L)``.

    Accepts a scalar or an array. Positions outside ``[0, L]`` raise
    :class:`DomainError`; wrap the call if the zero extension is wanted.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(~np.isfinite(xa)) or np.any(xa < 0.0) or np.any(xa > state.L):
        raise DomainError("psi is only defined on 0 <= x <= L")
    out = math.sqrt(2.0 / state.L) * np.sin(state.n * np.pi * xa / state.L)
    # sin(n*pi) is not exactly zero in floating point
    out = np.where((xa == 0.0) | (xa == state.L), 0.0, out)
    if out.ndim == 0:
        return float(out)
    return out


def energy(state: WellState) -> float:
    return (state.n * math.pi * state.hbar / state.L) ** 2 / (2.0 * state.mass)


def position_space_momentum_moment(state: WellState, power: int) -> float:
    """``<p^power>`` in the eigenstate, from the position representation.

    Odd moments vanish by symmetry; even moments are ``(n pi hbar / L)^power``.
    The closed form is returned; tests check it against quadrature of
    ``psi * (-i hbar d/dx)^power psi``.
    """
    if isinstance(power, bool) or int(power) != power or power < 0:
        raise DomainError(f"power must be a non-negative integer, got {power!r}")
    power = int(power)
    if power % 2:
        return 0.0
    return state.classical_momentum ** power
