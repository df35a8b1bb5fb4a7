import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy.integrate import quad

from wellspec import discrete
from wellspec.core import DomainError, WellState, energy, psi


def quad_amplitude(n, l):
    """<Xi_l | psi_n> on [0, 1] by adaptive quadrature."""
    w = 2 * math.pi * l
    re = quad(lambda x: math.cos(w * x) * psi(WellState(n), x), 0, 1, epsabs=1e-14, limit=200)[0]
    im = quad(lambda x: -math.sin(w * x) * psi(WellState(n), x), 0, 1, epsabs=1e-14, limit=200)[0]
    return complex(re, im)


def test_eigenvalues():
    assert discrete.eigenvalue(1) == pytest.approx(2 * math.pi, rel=1e-15)
    assert discrete.eigenvalue(-3, WellState(1, L=2.0, hbar=0.5)) == pytest.approx(-1.5 * math.pi, rel=1e-15)
    with pytest.raises(DomainError):
        discrete.eigenvalue(0.5)


def test_ground_state_examples():
    assert discrete.ground_state_amplitude(0) == pytest.approx(2 * math.sqrt(2) / math.pi, rel=1e-15)
    assert discrete.probability(WellState(1), 0) == pytest.approx(8 / math.pi ** 2, rel=1e-15)
    assert discrete.probability(WellState(1), 1) == pytest.approx(8 / (9 * math.pi ** 2), rel=1e-15)


def test_general_reduces_to_ground_state_bitwise():
    for l in range(-40, 41):
        assert discrete.general_amplitude(WellState(1), l) == discrete.ground_state_amplitude(l)


def test_first_excited_expansion():
    terms = discrete.first_excited_expansion()
    assert [t.l for t in terms] == [-1, 1]
    assert [t.probability for t in terms] == [0.5, 0.5]
    for t in terms:
        assert t.amplitude == discrete.general_amplitude(WellState(2), t.l)
    assert sum(discrete.probability(WellState(2), l) for l in range(-5, 6)) == 1.0


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_amplitudes_against_quadrature(n):
    for l in range(-6, 7):
        assert abs(discrete.general_amplitude(WellState(n), l) - quad_amplitude(n, l)) < 1e-12


@given(st.integers(1, 30), st.integers(-500, 500))
def test_amplitude_symmetry(n, l):
    s = WellState(n)
    a, b = discrete.general_amplitude(s, l), discrete.general_amplitude(s, -l)
    if n % 2:
        assert a == b and a.imag == 0
    else:
        assert a == -b
    assert discrete.probability(s, l) == pytest.approx(abs(a) ** 2, rel=1e-13, abs=0)


def test_probability_exact_rational_oracle():
    for l in range(-20, 21):
        exact = Fraction(8, ((2 * l - 1) * (2 * l + 1)) ** 2)
        assert discrete.probability(WellState(1), l) * math.pi ** 2 == pytest.approx(float(exact), rel=1e-15)


def test_probability_sum_ground_state():
    s = discrete.probability_sum(1000)
    assert s.brackets(1.0)
    assert s.width < 1e-8
    assert abs(s.value - 1) < 1e-9


def test_probability_sum_matches_direct_sum():
    K = 300
    direct = math.fsum(discrete.probability(WellState(1), l) for l in range(-K, K + 1))
    assert discrete.probability_sum(K).value == pytest.approx(direct, rel=1e-15)


def test_probability_brackets_monotone():
    prev = None
    for K in (1, 2, 5, 10, 100, 1000, 10_000):
        s = discrete.probability_sum(K)
        assert s.brackets(1.0)
        if prev is not None:
            assert s.lower >= prev.lower - 1e-16 and s.upper <= prev.upper + 1e-16
        prev = s


@pytest.mark.parametrize("n", [3, 5, 7])
def test_probability_sum_other_odd_states(n):
    for K in (1, 2, 10, 500):
        assert discrete.probability_sum(K, WellState(n)).brackets(1.0)


def test_probability_sum_even_states():
    assert discrete.probability_sum(3, WellState(2)).value == 1.0
    s = discrete.probability_sum(1, WellState(4))
    assert s.value == 0.0 and s.brackets(1.0)


def test_energy_expectation():
    e1 = energy(WellState(1))
    s = discrete.energy_expectation_sum(10**5)
    assert s.brackets(e1)
    assert abs(s.extrapolated - e1) < 1e-6 * e1
    with pytest.raises(DomainError):
        discrete.energy_expectation_sum(10, WellState(2))


def test_momentum_expectation_vanishes():
    for n in (1, 2, 3):
        assert discrete.momentum_expectation(WellState(n), 100) == 0.0


def test_reconstruction_converges():
    x = np.linspace(0.1, 0.9, 81)
    exact = psi(WellState(1), x)
    errs = [np.max(np.abs(discrete.reconstruct(WellState(1), x, K) - exact)) for K in (10, 50, 200)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-4
    np.testing.assert_allclose(discrete.reconstruct(WellState(2), x, 3), psi(WellState(2), x), atol=1e-14)


def test_spectrum_shape():
    sp = discrete.spectrum(WellState(1), 3)
    assert [c.l for c in sp] == list(range(-3, 4))
    assert [c.xi for c in sp] == [2 * math.pi * l for l in range(-3, 4)]
    with pytest.raises(DomainError):
        discrete.spectrum(WellState(1), -1)
