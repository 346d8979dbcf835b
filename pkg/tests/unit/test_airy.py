import math

import mpmath
import numpy as np
import pytest
from scipy import special

from turnwkb.exc import DomainError
from turnwkb.specfun import (
    AIRY_ARGMAX,
    AIRY_CROSSOVER,
    airy,
    airy_bi,
    airy_oscillatory_leading,
    airy_scaled_ic,
)


def _envelope(z):
    # |Ai(z)|, |Ai'(z)| are bounded by these on z < 0, up to a constant
    x = np.abs(z)
    return x ** -0.25 / math.sqrt(math.pi), x ** 0.25 / math.sqrt(math.pi)


@pytest.mark.parametrize("z", [-8.0001, -9.5, -12.0, -30.0, -250.0])
def test_far_path_agrees_with_scipy(z):
    ai, aip = airy(z)
    ref_ai, ref_aip, _, _ = special.airy(z)
    env_ai, env_aip = _envelope(z)
    assert abs(ai - ref_ai) < 1e-10 * env_ai
    assert abs(aip - ref_aip) < 1e-10 * env_aip


def test_paths_meet_at_crossover():
    below = airy(-AIRY_CROSSOVER - 1e-9)
    above = airy(-AIRY_CROSSOVER + 1e-9)
    env_ai, env_aip = _envelope(AIRY_CROSSOVER)
    assert abs(below.ai - above.ai) < 1e-11 * env_ai
    assert abs(below.ai_prime - above.ai_prime) < 1e-11 * env_aip


def test_scalar_and_array_shapes():
    pair = airy(0.5)
    assert isinstance(pair.ai, float)
    assert isinstance(pair.ai_prime, float)

    zs = np.linspace(-20.0, 3.0, 17)
    pair = airy(zs)
    assert pair.ai.shape == zs.shape
    np.testing.assert_allclose(pair.ai[-1], special.airy(3.0)[0], rtol=1e-14)


def test_non_finite_argument():
    with pytest.raises(DomainError):
        airy(float("nan"))
    with pytest.raises(DomainError):
        airy(np.array([0.0, -np.inf]))


def test_argmax_is_a_zero_of_the_derivative():
    assert abs(airy(AIRY_ARGMAX).ai_prime) < 1e-14
    assert airy(AIRY_ARGMAX).ai > airy(AIRY_ARGMAX + 0.01).ai
    assert airy(AIRY_ARGMAX).ai > airy(AIRY_ARGMAX - 0.01).ai


@pytest.mark.parametrize("z", [-5.0, -1.0, 0.0, 1.5])
def test_wronskian(z):
    ai = airy(z)
    bi = airy_bi(z)
    assert ai.ai * bi.ai_prime - ai.ai_prime * bi.ai == pytest.approx(1 / math.pi)


def test_scaled_ic_at_turning_point():
    eps = 2.0 ** -6
    psi, eps_dpsi = airy_scaled_ic(0.0, eps)
    ai0, aip0, _, _ = special.airy(0.0)
    assert psi == pytest.approx(eps ** (-1 / 6) * ai0, rel=1e-14)
    assert eps_dpsi == pytest.approx(-(eps ** (1 / 6)) * aip0, rel=1e-14)


def test_scaled_ic_is_balanced():
    # psi and eps psi' stay O(1) to the right of the turning layer
    xs = np.linspace(0.1, 1.0, 50)
    for eps in (2.0 ** -4, 2.0 ** -10):
        psi, eps_dpsi = airy_scaled_ic(xs, eps)
        assert np.max(np.abs(psi)) < 1.0
        assert np.max(np.abs(eps_dpsi)) < 1.0


@pytest.mark.parametrize("eps", [0.0, -0.5, 1.5])
def test_scaled_ic_rejects_eps(eps):
    with pytest.raises(DomainError):
        airy_scaled_ic(0.5, eps)


def test_oscillatory_leading_form():
    eps = 2.0 ** -10
    xs = np.array([0.2, 0.5, 0.9])
    psi, eps_dpsi = airy_scaled_ic(xs, eps)
    lead_psi, lead_dpsi = airy_oscillatory_leading(xs, eps)
    scale = xs ** -0.25 / math.sqrt(math.pi)
    np.testing.assert_array_less(np.abs(psi - lead_psi), 1e-3 * scale)
    np.testing.assert_array_less(np.abs(eps_dpsi - lead_dpsi), 1e-3 / scale)


def test_oscillatory_leading_form_needs_positive_x():
    with pytest.raises(DomainError):
        airy_oscillatory_leading(0.0, 0.1)


@pytest.mark.slow
def test_matches_mpmath_over_a_wide_range():
    z = np.linspace(-1e3, 10.0, 10_000)
    ai, aip = airy(z)
    with mpmath.workdps(30):
        ref_ai = np.array([float(mpmath.airyai(v)) for v in z])
        ref_aip = np.array([float(mpmath.airyai(v, derivative=1)) for v in z])
    scale = 1.0 + np.abs(z)
    env_ai = scale ** -0.25 / math.sqrt(math.pi)
    env_aip = scale ** 0.25 / math.sqrt(math.pi)
    assert np.max(np.abs(ai - ref_ai) / env_ai) <= 1e-12
    assert np.max(np.abs(aip - ref_aip) / env_aip) <= 1e-12
