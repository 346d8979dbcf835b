import dataclasses

import numpy as np
import pytest

from turnwkb.coefficient import airy_linear, from_polynomial, pcf_quadratic
from turnwkb.config import NumericsSettings
from turnwkb.exc import DomainError
from turnwkb.phase import PhaseMethod
from turnwkb.services import (
    APPROX,
    BENCH,
    BLOWUP,
    CONVERGENCE,
    StudyConfig,
    effective_phase,
    run_approx_study,
    run_bench,
    run_blowup,
    run_convergence,
)


def _dyadic(first, last):
    return tuple(2.0 ** -k for k in range(first, last + 1))


def test_config_validation():
    with pytest.raises(ValueError):
        StudyConfig("sideways", airy_linear(), (0.1,))
    with pytest.raises(ValueError):
        StudyConfig(CONVERGENCE, airy_linear(), (0.1, -0.1))
    with pytest.raises(ValueError):
        StudyConfig(CONVERGENCE, airy_linear(), (0.1,), h=())
    with pytest.raises(ValueError):
        StudyConfig(BENCH, airy_linear(), (0.1,), repeats=0)
    with pytest.raises(ValueError):
        StudyConfig(APPROX, airy_linear(), (0.1,), x0=0.5)


def test_config_orders_steps():
    cfg = StudyConfig(CONVERGENCE, airy_linear(), (0.1,), h=(0.01, 0.1, 0.05))
    assert cfg.h == (0.1, 0.05, 0.01)
    assert cfg.x1 == 0.1


def test_effective_phase():
    exact = PhaseMethod.exact()
    assert effective_phase(airy_linear(), exact) == exact
    assert effective_phase(pcf_quadratic(), exact) == PhaseMethod.adaptive(1e-12)
    simpson = PhaseMethod.simpson(2)
    assert effective_phase(pcf_quadratic(), simpson) == simpson


def test_small_convergence_run():
    cfg = StudyConfig(
        CONVERGENCE, airy_linear(), _dyadic(4, 5), h=_dyadic(4, 6)
    )
    report = run_convergence(cfg)
    assert len(report.records) == 6
    assert all(r.err_total > 0 for r in report.records)
    assert sorted(report.h_slopes) == sorted(cfg.eps)
    assert sorted(report.eps_slopes) == sorted(cfg.h)


def test_blowup_needs_enough_eps():
    cfg = StudyConfig(BLOWUP, airy_linear(), _dyadic(4, 7))
    with pytest.raises(DomainError):
        run_blowup(cfg)


@pytest.mark.parametrize(
    "c, phase",
    [
        (pcf_quadratic(), PhaseMethod.exact()),
        (from_polynomial("linear", 0.1, (0.0025, 0.95, 0.25)), PhaseMethod.exact()),
        (airy_linear(), PhaseMethod.simpson(1)),
    ],
)
def test_bench_needs_the_linear_exact_case(c, phase):
    cfg = StudyConfig(BENCH, c, (0.1,), phase=phase)
    with pytest.raises(DomainError):
        run_bench(cfg)


def test_small_approx_run():
    cfg = StudyConfig(
        APPROX, pcf_quadratic(), (2.0 ** -4,), x1_values=(0.05, 0.1, 0.2)
    )
    report = run_approx_study(cfg)
    assert [r.x1 for r in report.rows] == [0.05, 0.1, 0.2]
    assert list(report.x1_slopes) == [2.0 ** -4]
    assert report.eps_slopes == {}
    assert report.x1_slopes[2.0 ** -4].slope > 1.5


def test_h_order_two():
    cfg = StudyConfig(
        CONVERGENCE, airy_linear(), (2.0 ** -4, 2.0 ** -6), h=_dyadic(4, 10)
    )
    for eps, fit in run_convergence(cfg).h_slopes.items():
        assert fit.slope == pytest.approx(2.0, abs=0.15), eps


@pytest.mark.parametrize(
    "c",
    [airy_linear(), pytest.param(pcf_quadratic(), marks=pytest.mark.slow)],
    ids=["airy", "pcf"],
)
def test_eps_order(c):
    cfg = StudyConfig(CONVERGENCE, c, _dyadic(6, 10), h=(2.0 ** -7,))
    (fit,) = run_convergence(cfg).eps_slopes.values()
    assert fit.slope >= 17 / 6


def test_airy_blowup_law():
    cfg = StudyConfig(BLOWUP, airy_linear(), _dyadic(4, 12))
    report = run_blowup(cfg)
    assert report.psi_fit.slope == pytest.approx(-1 / 6, abs=0.02)
    assert report.eps_dpsi_fit.slope == pytest.approx(0.0, abs=0.05)
    sup = [r.sup_eps_dpsi for r in report.rows]
    assert max(sup) / min(sup) < 2.0


@pytest.mark.slow
def test_pcf_blowup_law():
    cfg = StudyConfig(
        BLOWUP,
        pcf_quadratic(),
        _dyadic(5, 9),
        h=(1e-2,),
        settings=NumericsSettings(pcf_sup_samples=100),
    )
    report = run_blowup(cfg)
    assert report.psi_fit.slope == pytest.approx(-1 / 6, abs=0.02)
    assert report.eps_dpsi_fit.slope == pytest.approx(0.0, abs=0.05)


@pytest.mark.slow
def test_simpson_error_curves_invert():
    # with a coarse grid the smallest eps has the largest error
    cfg = StudyConfig(
        CONVERGENCE,
        airy_linear(),
        _dyadic(8, 10),
        h=(0.1,),
        phase=PhaseMethod.simpson(1),
    )
    records = sorted(run_convergence(cfg).records, key=lambda r: r.eps)
    errors = [r.err_total for r in records]
    assert errors == sorted(errors, reverse=True)


@pytest.mark.slow
def test_simpson_orders():
    cfg = StudyConfig(
        CONVERGENCE,
        airy_linear(),
        _dyadic(10, 12),
        h=_dyadic(3, 7),
        phase=PhaseMethod.simpson(1),
    )
    report = run_convergence(cfg)
    for eps, fit in report.h_slopes.items():
        assert fit.slope == pytest.approx(4.0, abs=0.3), eps
    for h, fit in report.eps_slopes.items():
        assert fit.slope == pytest.approx(-7 / 6, abs=0.2), h


@pytest.mark.slow
def test_bench_trend():
    cfg = StudyConfig(BENCH, airy_linear(), _dyadic(4, 10), h=(1e-3,))
    report = run_bench(cfg)
    runtimes = [r.marcher_runtime_s for r in report.rows]
    assert max(runtimes) / min(runtimes) < 2.0
    assert report.rows[-1].dp45_runtime_s > 20 * report.rows[0].dp45_runtime_s
    for row in report.rows:
        assert row.marcher_error / 5 < row.dp45_error < row.marcher_error * 5
    assert report.steps_fit.slope > 0.5


@pytest.mark.slow
def test_approximation_error_law():
    cfg = StudyConfig(APPROX, pcf_quadratic(0.02), _dyadic(4, 7))
    report = run_approx_study(cfg)
    for eps, fit in report.x1_slopes.items():
        assert fit.slope == pytest.approx(3.0, abs=0.3), eps
    for x1, fit in report.eps_slopes.items():
        assert fit.slope == pytest.approx(-1.5, abs=0.2), x1


def test_approximation_error_is_grid_free():
    cfg = StudyConfig(APPROX, pcf_quadratic(), (2.0 ** -4,), x1_values=(0.1,))
    rows = run_approx_study(cfg).rows
    other = dataclasses.replace(cfg, h=(1e-2,))
    assert run_approx_study(other).rows == rows
    assert np.isfinite(rows[0].max_error)
