"""
Experiment drivers: convergence in h and eps, the turning-point blow-up law,
the marcher vs. Dormand-Prince benchmark, and the error caused by replacing
the coefficient by its tangent line near the turning point.
"""
import dataclasses
import logging
import statistics
import time
import typing

import numpy as np

from turnwkb.baseline import RkMode, RkRun, match_tolerance, rk_solve
from turnwkb.coefficient import Coefficient
from turnwkb.config import NumericsSettings
from turnwkb.exc import DomainError
from turnwkb.hybrid import (
    AIRY_LINEAR,
    PCF_QUADRATIC,
    AnalyticPiece,
    ErrorRecord,
    ExactSolution,
    error_record,
    exact_for,
    match_two_piece,
    solve,
)
from turnwkb.phase import EXACT, PhaseMethod
from turnwkb.services.fitting import SlopeFit, fit_slope
from turnwkb.services.grids import sup_grid, uniform_grid
from turnwkb.services.sweep import run_sweep

log = logging.getLogger(__name__)

CONVERGENCE = "convergence"
BLOWUP = "blowup"
BENCH = "bench"
APPROX = "approx"
SOLVE = "solve"
STUDY_KINDS = (SOLVE, CONVERGENCE, BLOWUP, BENCH, APPROX)

# phase used in place of "exact" when the body has no closed form
FALLBACK_PHASE = PhaseMethod.adaptive(1e-12)
DEFAULT_X1_VALUES = (0.02, 0.03, 0.04, 0.05, 0.06)
APPROX_SAMPLES = 400
MIN_BLOWUP_EPS = 5


@dataclasses.dataclass(frozen=True)
class StudyConfig:
    kind: str
    coefficient: Coefficient
    eps: typing.Tuple[float, ...]
    h: typing.Tuple[float, ...] = (1e-3,)
    phase: PhaseMethod = PhaseMethod.exact()
    potential: str = "airy-linear"
    repeats: int = 5
    x0: float = -0.5
    x1_values: typing.Tuple[float, ...] = DEFAULT_X1_VALUES
    settings: NumericsSettings = NumericsSettings()

    def __post_init__(self):
        if self.kind not in STUDY_KINDS:
            raise ValueError(f"unknown study kind {self.kind!r}")
        if not self.eps or any(not e > 0 for e in self.eps):
            raise ValueError("eps values must be positive")
        if not self.h or any(not h > 0 for h in self.h):
            raise ValueError("h values must be positive")
        if self.repeats < 1:
            raise ValueError("repeats must be at least 1")
        if not self.x0 < 0:
            raise ValueError("x0 must lie left of the turning point")
        object.__setattr__(self, "eps", tuple(float(e) for e in self.eps))
        object.__setattr__(self, "h", tuple(sorted(map(float, self.h), reverse=True)))

    @property
    def x1(self) -> float:
        return self.coefficient.x1


def effective_phase(c: Coefficient, method: PhaseMethod) -> PhaseMethod:
    """exact phase, or adaptive(1e-12) quadrature where no closed form exists"""
    if method.kind == EXACT and c.body.linear_form() is None:
        return FALLBACK_PHASE
    return method


def _timed_solve(c, eps, nodes, method, max_digits):
    start = time.perf_counter()
    sol = solve(c, eps, nodes, method, max_digits=max_digits)
    return sol, time.perf_counter() - start


def _exact(cfg, eps) -> ExactSolution:
    return exact_for(cfg.coefficient, eps, max_digits=cfg.settings.pcf_max_digits)


# convergence


class ConvergenceReport(typing.NamedTuple):
    records: typing.List[ErrorRecord]
    h_slopes: typing.Dict[float, SlopeFit]
    eps_slopes: typing.Dict[float, SlopeFit]


def _convergence_point(args):
    cfg, eps, h = args
    c = cfg.coefficient
    grid = uniform_grid(c.x1, h)
    method = effective_phase(c, cfg.phase)
    sol, runtime = _timed_solve(
        c, eps, grid.nodes, method, cfg.settings.pcf_max_digits
    )
    return error_record(
        sol,
        _exact(cfg, eps),
        h,
        runtime_s=runtime,
        samples=sup_grid(c, eps, cfg.settings),
    )


def _fits(records, group_key, x_key):
    groups = {}
    for rec in records:
        groups.setdefault(getattr(rec, group_key), []).append(rec)
    fits = {}
    for key, rows in groups.items():
        if len(rows) < 2:
            continue
        try:
            fits[key] = fit_slope(
                [getattr(r, x_key) for r in rows], [r.err_total for r in rows]
            )
        except ValueError as err:
            log.info("no %s fit for %s=%g: %s", x_key, group_key, key, err)
    return fits


def run_convergence(cfg: StudyConfig) -> ConvergenceReport:
    points = [(cfg, eps, h) for eps in cfg.eps for h in cfg.h]
    log.info("convergence study on %d (eps, h) points", len(points))
    records = run_sweep(_convergence_point, points, cfg.settings.jobs)
    return ConvergenceReport(
        records=records,
        h_slopes=_fits(records, "eps", "h_effective"),
        eps_slopes=_fits(records, "h", "eps"),
    )


# blow-up


class BlowupRow(typing.NamedTuple):
    eps: float
    sup_psi: float
    sup_eps_dpsi: float


class BlowupReport(typing.NamedTuple):
    rows: typing.List[BlowupRow]
    psi_fit: SlopeFit
    eps_dpsi_fit: SlopeFit


def _blowup_point(args):
    cfg, eps = args
    c = cfg.coefficient
    grid = uniform_grid(c.x1, cfg.h[-1])
    sol, _ = _timed_solve(
        c, eps, grid.nodes, effective_phase(c, cfg.phase), cfg.settings.pcf_max_digits
    )
    sup_psi, sup_dpsi = sol.max_abs(sup_grid(c, eps, cfg.settings))
    return BlowupRow(eps, sup_psi, sup_dpsi)


def run_blowup(cfg: StudyConfig) -> BlowupReport:
    if len(set(cfg.eps)) < MIN_BLOWUP_EPS:
        raise DomainError(
            f"the blow-up fit needs at least {MIN_BLOWUP_EPS} eps values, "
            f"got {len(set(cfg.eps))}"
        )
    rows = run_sweep(_blowup_point, [(cfg, eps) for eps in cfg.eps], cfg.settings.jobs)
    eps_values = [r.eps for r in rows]
    return BlowupReport(
        rows=rows,
        psi_fit=fit_slope(eps_values, [r.sup_psi for r in rows], floor=None),
        eps_dpsi_fit=fit_slope(eps_values, [r.sup_eps_dpsi for r in rows], floor=None),
    )


# benchmark


class BenchRow(typing.NamedTuple):
    eps: float
    marcher_runtime_s: float
    marcher_error: float
    dp45_runtime_s: float
    dp45_error: float
    dp45_tol: float
    dp45_steps: int

    @property
    def runtime_ratio(self) -> float:
        return self.dp45_runtime_s / self.marcher_runtime_s


class BenchReport(typing.NamedTuple):
    rows: typing.List[BenchRow]
    steps_fit: typing.Optional[SlopeFit]


def _median_runtime(fn, repeats):
    fn()  # warm-up
    times = []
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return statistics.median(times)


def rk_hybrid_error(
    run: RkRun,
    c: Coefficient,
    exact: ExactSolution,
    sup_minus: typing.Tuple[float, float],
) -> float:
    """
    Error of the dp45 hybrid solution in the same norm as the marcher: its
    alpha error times sup |psi_-| on [0, x1] plus the terminal-state error.
    """
    eps = exact.eps
    root = np.sqrt(c.body_a(1.0))
    alpha = -2j * root / (run.eps_dpsi - 1j * root * run.psi)
    psi_ex, eps_dpsi_ex = exact.evaluate(1.0)
    left = abs(alpha - exact.alpha) * (sup_minus[0] + sup_minus[1])
    right = abs(alpha * run.psi - psi_ex) + abs(alpha * run.eps_dpsi - eps_dpsi_ex)
    log.debug("dp45 hybrid error at eps=%g: left %.3e, right %.3e", eps, left, right)
    return float(max(left, right))


def run_bench(cfg: StudyConfig) -> BenchReport:
    c = cfg.coefficient
    if c.kind_label != "airy" or c.body.linear_form() is None:
        raise DomainError("the benchmark needs the airy-linear potential")
    if cfg.phase.kind != EXACT:
        raise DomainError("the benchmark needs the exact phase")
    h = cfg.h[0]
    grid = uniform_grid(c.x1, h)

    # timing runs are kept sequential
    rows = []
    for eps in cfg.eps:
        exact = _exact(cfg, eps)
        samples = sup_grid(c, eps, cfg.settings)
        sol, _ = _timed_solve(
            c, eps, grid.nodes, cfg.phase, cfg.settings.pcf_max_digits
        )
        marcher_error = error_record(sol, exact, h, samples=samples).err_total
        marcher_time = _median_runtime(
            lambda: solve(c, eps, grid.nodes, cfg.phase), cfg.repeats
        )

        psi_minus, eps_dpsi_minus = sol.sampler(samples)
        sup_minus = (
            float(np.max(np.abs(psi_minus))),
            float(np.max(np.abs(eps_dpsi_minus))),
        )
        ic = sol.sampler(c.x1)
        matched = match_tolerance(
            c,
            eps,
            ic,
            marcher_error,
            lambda run: rk_hybrid_error(run, c, exact, sup_minus),
        )
        mode = RkMode.dp45(matched.tol)
        dp45_time = _median_runtime(lambda: rk_solve(c, eps, ic, mode), cfg.repeats)
        log.info(
            "bench eps=%g: marcher %.3es (err %.3e), dp45 %.3es (err %.3e)",
            eps,
            marcher_time,
            marcher_error,
            dp45_time,
            matched.error,
        )
        rows.append(
            BenchRow(
                eps=eps,
                marcher_runtime_s=marcher_time,
                marcher_error=marcher_error,
                dp45_runtime_s=dp45_time,
                dp45_error=matched.error,
                dp45_tol=matched.tol,
                dp45_steps=matched.run.accepted,
            )
        )

    steps_fit = None
    if len(rows) >= 2:
        steps_fit = fit_slope(
            [1.0 / r.eps for r in rows], [r.dp45_steps for r in rows], floor=None
        )
    return BenchReport(rows, steps_fit)


# linear approximation near the turning point


class ApproxRow(typing.NamedTuple):
    eps: float
    x1: float
    max_error: float


class ApproxReport(typing.NamedTuple):
    rows: typing.List[ApproxRow]
    x1_slopes: typing.Dict[float, SlopeFit]
    eps_slopes: typing.Dict[float, SlopeFit]


def approximation_error(
    eps: float,
    x1: float,
    samples: typing.Optional[np.ndarray] = None,
    k1: float = -0.5,
    k2: float = 1.0,
    max_digits: typing.Optional[int] = None,
) -> float:
    """
    max |E(x)| on [0, 1] where E is the difference between the scattering
    solutions for a = x (x <= 0), k1 x^2 + k2 x (x > 0) and for its tangent
    approximation a = x (x <= x1), k1 x^2 + k2 x (x > x1).
    """
    if samples is None:
        samples = np.linspace(0.0, 1.0, APPROX_SAMPLES)
    left = AnalyticPiece(AIRY_LINEAR)
    right = AnalyticPiece(PCF_QUADRATIC, k1=k1, k2=k2)
    if max_digits is not None:
        right = dataclasses.replace(right, max_digits=max_digits)
    original = match_two_piece(left, right, 0.0, eps)
    approximated = match_two_piece(left, right, x1, eps)
    diff = original.evaluate_many(samples) - approximated.evaluate_many(samples)
    return float(np.max(np.abs(diff)))


def _approx_point(args):
    cfg, eps, x1 = args
    return ApproxRow(
        eps,
        x1,
        approximation_error(eps, x1, max_digits=cfg.settings.pcf_max_digits),
    )


def run_approx_study(cfg: StudyConfig) -> ApproxReport:
    points = [(cfg, eps, x1) for eps in cfg.eps for x1 in cfg.x1_values]
    log.info("approximation study on %d (eps, x1) points", len(points))
    rows = run_sweep(_approx_point, points, cfg.settings.jobs)

    def fits(group, x_of):
        out = {}
        for key in sorted({group(r) for r in rows}):
            chosen = [r for r in rows if group(r) == key]
            if len(chosen) >= 2:
                out[key] = fit_slope(
                    [x_of(r) for r in chosen],
                    [r.max_error for r in chosen],
                    floor=None,
                )
        return out

    return ApproxReport(
        rows=rows,
        x1_slopes=fits(lambda r: r.eps, lambda r: r.x1),
        eps_slopes=fits(lambda r: r.x1, lambda r: r.eps),
    )
