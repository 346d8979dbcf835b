import math

import pytest

from turnwkb.coefficient import airy_linear, from_polynomial, pcf_quadratic
from turnwkb.exc import UnsupportedExact
from turnwkb.hybrid import (
    ErrorRecord,
    error_record,
    exact_airy,
    exact_for,
    exact_pcf,
    solve,
)
from turnwkb.phase import PhaseMethod
from turnwkb.services import sup_grid, uniform_grid


def _transparent_residual(exact):
    root = math.sqrt(exact.coefficient.body_a(1.0))
    psi, eps_dpsi = exact.evaluate(1.0)
    return abs(eps_dpsi - 1j * root * psi + 2j * root)


def test_exact_airy_meets_the_transparent_condition():
    assert _transparent_residual(exact_airy(2.0 ** -6)) < 1e-12


def test_exact_pcf_meets_the_transparent_condition():
    assert _transparent_residual(exact_pcf(2.0 ** -5)) < 1e-12


def test_exact_needs_the_region_formula_everywhere():
    tilted = from_polynomial("linear", 0.1, (0.0025, 0.95, 0.25))
    with pytest.raises(UnsupportedExact):
        exact_for(tilted, 0.1)
    # the region polynomial, built the way potential files are
    loaded = from_polynomial("quadratic", 0.1, (0.0, 1.0, -0.5), -0.5, 1.0)
    assert exact_for(loaded, 0.25).alpha == exact_pcf(0.25).alpha
    assert exact_for(pcf_quadratic(), 0.25).alpha == exact_pcf(0.25).alpha


def test_error_record_row():
    record = ErrorRecord("airy", 0.1, 1e-3, 1e-3, "exact", 2e-5, 3e-5, 0.01)
    assert record.err_total == pytest.approx(5e-5)
    row = record.to_row()
    assert row["err_total"] == record.err_total
    assert row["phase_method"] == "exact"
    with pytest.raises(ValueError):
        ErrorRecord("airy", 0.1, 1e-3, 1e-3, "exact", -1.0, 0.0, 0.0)


def test_error_record_from_a_solution():
    c = airy_linear()
    eps = 2.0 ** -5
    sol = solve(c, eps, uniform_grid(c.x1, 1e-3).nodes, PhaseMethod.exact())
    record = error_record(sol, exact_airy(eps), 1e-3, samples=sup_grid(c, eps))
    assert record.kind == "airy"
    assert record.h_effective == pytest.approx(1e-3)
    assert 0 < record.err_total < 1e-3


def _marcher_errors(reference):
    setup = reference["setup"]
    c = airy_linear(setup["x1"])
    nodes = uniform_grid(c.x1, setup["h"]).nodes
    for row in reference["rows"]:
        eps = 2.0 ** row["eps_exponent"]
        sol = solve(c, eps, nodes, PhaseMethod.exact())
        samples = sup_grid(c, eps)
        record = error_record(sol, exact_airy(eps), setup["h"], samples=samples)
        yield row, record.err_total


def test_marcher_error_at_the_smallest_eps(load_reference):
    reference = load_reference("airy_benchmark.yaml")
    reference["rows"] = [r for r in reference["rows"] if r["eps_exponent"] == -10]
    ((row, error),) = _marcher_errors(reference)
    assert row["marcher_error"] / 5 < error < row["marcher_error"] * 5


def test_marcher_errors_follow_the_reference_trend(load_reference):
    errors = []
    for row, error in _marcher_errors(load_reference("airy_benchmark.yaml")):
        assert row["marcher_error"] / 5 < error < row["marcher_error"] * 5
        errors.append(error)
    assert errors[-1] < errors[0] / 1000
