import numpy as np
import pytest

from turnwkb.services import ROUNDOFF_FLOOR, fit_slope


def test_exact_power_law():
    xs = 2.0 ** -np.arange(4, 11)
    fit = fit_slope(xs, 3.0 * xs ** 2)
    assert fit.slope == pytest.approx(2.0)
    assert fit.intercept == pytest.approx(np.log(3.0))
    assert fit.n_points == 7
    assert fit.ci_low <= fit.slope <= fit.ci_high


def test_noisy_fit_interval():
    rng = np.random.default_rng(7)
    xs = np.logspace(-3, -1, 12)
    ys = xs ** 1.5 * np.exp(rng.normal(0.0, 0.05, xs.shape))
    fit = fit_slope(xs, ys)
    assert fit.slope == pytest.approx(1.5, abs=0.1)
    assert fit.ci_low < fit.slope < fit.ci_high
    assert fit.stderr > 0


def test_floor_drops_roundoff_points():
    xs = np.array([1e-1, 1e-2, 1e-3, 1e-4])
    ys = np.array([1e-5, 1e-7, 1e-9, ROUNDOFF_FLOOR / 2])
    fit = fit_slope(xs, ys)
    assert fit.n_points == 3
    assert fit.slope == pytest.approx(2.0)
    assert fit_slope(xs, ys, floor=None).n_points == 4


def test_two_points_have_no_spread():
    fit = fit_slope([1.0, 2.0], [1.0, 4.0])
    assert fit.slope == pytest.approx(2.0)
    assert fit.ci_low == fit.ci_high == fit.slope
    assert fit.to_row()["n_points"] == 2


@pytest.mark.parametrize(
    "xs, ys", [([1.0], [1.0]), ([1.0, 2.0], [1e-13, 1e-12]), ([1.0, 2.0], [1.0])]
)
def test_fit_needs_two_points(xs, ys):
    with pytest.raises(ValueError):
        fit_slope(xs, ys)
