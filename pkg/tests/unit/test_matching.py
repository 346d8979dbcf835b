import numpy as np
import pytest

from turnwkb.exc import DomainError
from turnwkb.hybrid import (
    AIRY_LINEAR,
    PCF_QUADRATIC,
    AnalyticPiece,
    exact_airy,
    exact_pcf,
    match_two_piece,
)
from turnwkb.services import approximation_error

AIRY = AnalyticPiece(AIRY_LINEAR)
PCF = AnalyticPiece(PCF_QUADRATIC)


def test_unknown_piece():
    with pytest.raises(ValueError):
        AnalyticPiece("cubic")


def test_airy_secondary_is_independent():
    eps = 2.0 ** -4
    f, df = AIRY.primary(eps, 0.3)
    g, dg = AIRY.secondary(eps, 0.3)
    # d/dx flips the sign of the Ai, Bi Wronskian
    assert f * dg - g * df == pytest.approx(-1 / np.pi)


@pytest.mark.parametrize("piece, exact_fn", [(AIRY, exact_airy), (PCF, exact_pcf)])
def test_identical_pieces_reproduce_the_exact_solution(piece, exact_fn):
    exact = exact_fn(2.0 ** -4)
    sol = match_two_piece(piece, piece, 0.2, 2.0 ** -4)
    first, second = sol.amplitudes
    assert first == pytest.approx(1.0, abs=1e-10)
    assert second == pytest.approx(0.0, abs=1e-10)
    assert sol.alpha == pytest.approx(exact.alpha, rel=1e-10)


def test_matched_solution_is_c1_at_the_interface():
    eps, interface = 2.0 ** -5, 0.1
    sol = match_two_piece(AIRY, PCF, interface, eps)
    left = sol.evaluate(interface)
    first, second = sol.amplitudes
    f, df = PCF.primary(eps, interface)
    g, dg = PCF.secondary(eps, interface)
    right = (
        sol.alpha * (first * f + second * g),
        sol.alpha * (first * df + second * dg),
    )
    assert right[0] == pytest.approx(left[0], rel=1e-10)
    assert right[1] == pytest.approx(left[1], rel=1e-10)


def test_matched_solution_is_transparent_at_one():
    sol = match_two_piece(AIRY, PCF, 0.1, 2.0 ** -5)
    psi, eps_dpsi = sol.evaluate(1.0)
    root = np.sqrt(PCF.a(1.0))
    assert abs(eps_dpsi - 1j * root * psi + 2j * root) < 1e-10
    assert abs(psi - 1.0) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("interface", [-0.1, 1.0])
def test_interface_domain(interface):
    with pytest.raises(DomainError):
        match_two_piece(AIRY, PCF, interface, 0.1)


def test_no_error_without_approximation():
    assert approximation_error(2.0 ** -4, 0.0) == 0.0


def test_error_grows_with_the_switching_point():
    samples = np.linspace(0.0, 1.0, 101)
    small = approximation_error(2.0 ** -4, 0.05, samples=samples)
    large = approximation_error(2.0 ** -4, 0.2, samples=samples)
    assert 0 < small < large
