"""
The hybrid scattering solution on [0, 1].

On [0, x1] the solution is alpha times the analytic turning-region solution;
on the grid {x1, ..., 1} it is alpha times the WKB-marched IVP solution. The
complex constant alpha is chosen so the transparent condition at x = 1,

    eps psi'(1) - i sqrt(a(1)) psi(1) = -2i sqrt(a(1)),

holds exactly. It is computed in the W frame.
"""
import dataclasses
import logging
import typing

import numpy as np

from turnwkb.coefficient import LINEAR, QUADRATIC, Coefficient, validate
from turnwkb.exc import DomainError, SingularAlpha
from turnwkb.hybrid.samplers import sampler_for
from turnwkb.phase import PhaseMethod, PhaseTable, build_phase
from turnwkb.specfun import AIRY_ARGMAX, DEFAULT_MAX_DIGITS
from turnwkb.wkbmarch import MarchTrace, WVector, march, w_from_psi

log = logging.getLogger(__name__)

GRID_TOL = 1e-12
ALPHA_FLOOR = 1e-300
DEFAULT_SUP_SAMPLES = 2000


class BcResiduals(typing.NamedTuple):
    robin_left: float
    transparent_right: float


@dataclasses.dataclass(frozen=True)
class HybridSolution:
    coefficient: Coefficient
    eps: float
    alpha: complex
    nodes: np.ndarray
    psi: np.ndarray
    eps_dpsi: np.ndarray
    sampler: typing.Callable
    phase: PhaseTable
    trace: MarchTrace
    ic_scale: float = 1.0

    @property
    def kind(self) -> str:
        return self.coefficient.kind_label

    @property
    def x1(self) -> float:
        return self.coefficient.x1

    @property
    def phase_method(self) -> PhaseMethod:
        return self.phase.method

    def evaluate(self, x: float) -> typing.Tuple[complex, complex]:
        """
        (psi, eps*psi') at x. On [0, x1] the analytic sampler is used; on
        [x1, 1] the value at the node at (or nearest below) x.
        """
        if not -GRID_TOL <= x <= 1.0 + GRID_TOL:
            raise DomainError(f"x={x} is outside [0, 1]")
        if x < self.nodes[0] - GRID_TOL:
            psi, eps_dpsi = self.sampler(x)
            return (
                self.alpha * self.ic_scale * psi,
                self.alpha * self.ic_scale * eps_dpsi,
            )
        index = int(np.searchsorted(self.nodes, x + GRID_TOL, side="right")) - 1
        index = max(index, 0)
        return complex(self.psi[index]), complex(self.eps_dpsi[index])

    def analytic(self, xs: np.ndarray) -> typing.Tuple[np.ndarray, np.ndarray]:
        """alpha * psi_- and alpha * eps psi_-' on points of [0, x1]"""
        psi, eps_dpsi = self.sampler(np.asarray(xs, dtype=float))
        scale = self.alpha * self.ic_scale
        return scale * np.asarray(psi), scale * np.asarray(eps_dpsi)

    def bc_residuals(self) -> BcResiduals:
        root = np.sqrt(self.coefficient.body_a(1.0))
        right = abs(self.eps_dpsi[-1] - 1j * root * self.psi[-1] + 2j * root)

        # psi(x1) must be parallel to the turning-region data
        left_psi, left_dpsi = self.sampler(self.x1)
        cross = self.psi[0] * left_dpsi - self.eps_dpsi[0] * left_psi
        size = np.hypot(abs(self.psi[0]), abs(self.eps_dpsi[0])) * np.hypot(
            left_psi, left_dpsi
        )
        robin = abs(cross) / size if size else abs(cross)
        return BcResiduals(float(robin), float(right))

    def reflection_modulus(self) -> float:
        """|psi(1) - 1|, the modulus of the reflected wave"""
        return float(abs(self.psi[-1] - 1.0))

    def default_samples(self, count: int = DEFAULT_SUP_SAMPLES) -> np.ndarray:
        samples = np.linspace(0.0, self.x1, count, endpoint=False)
        if self.kind == "airy":
            peak = -AIRY_ARGMAX * self.eps ** (2.0 / 3.0)
            if peak < self.x1:
                samples = np.sort(np.append(samples, peak))
        return samples

    def max_abs(
        self, samples: typing.Optional[np.ndarray] = None
    ) -> typing.Tuple[float, float]:
        """sup over [0, 1] of |psi| and |eps psi'|, from samples plus nodes"""
        if samples is None:
            samples = self.default_samples()
        psi, eps_dpsi = self.analytic(samples)
        sup_psi = max(np.max(np.abs(self.psi)), np.max(np.abs(psi), initial=0.0))
        sup_dpsi = max(
            np.max(np.abs(self.eps_dpsi)), np.max(np.abs(eps_dpsi), initial=0.0)
        )
        return float(sup_psi), float(sup_dpsi)


def scale_to_transparent(c: Coefficient, eps: float, w_end: np.ndarray) -> complex:
    """alpha = -2i a(1)^(1/4) / (w2 - [i + (eps/4) a(1)^(-3/2) a'(1)] w1) at x = 1"""
    derivs = c.derivatives(1.0, 1)
    a1, slope = float(derivs[0][0]), float(derivs[1][0])
    denominator = w_end[1] - (1j + eps / 4.0 * a1 ** -1.5 * slope) * w_end[0]
    if abs(denominator) < ALPHA_FLOOR:
        raise SingularAlpha("the marched state at x=1 vanishes")
    return -2j * a1 ** 0.25 / denominator


def _check_grid(c, grid):
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or len(grid) < 2:
        raise DomainError("the grid needs at least two nodes")
    if abs(grid[0] - c.x1) > GRID_TOL or abs(grid[-1] - 1.0) > GRID_TOL:
        raise DomainError(
            f"the grid must run from x1={c.x1} to 1, got [{grid[0]}, {grid[-1]}]"
        )
    return grid


def _solve(c, eps, grid, phase_method, ic_scale, max_digits):
    validate(c, eps)
    nodes = _check_grid(c, grid)
    sampler = sampler_for(c, eps, max_digits=max_digits)
    psi0, eps_dpsi0 = sampler(c.x1)
    w_start = w_from_psi(c, eps, c.x1, ic_scale * psi0, ic_scale * eps_dpsi0)

    table = build_phase(c, eps, nodes, phase_method)
    trace = march(c, eps, table, WVector(float(w_start.w1), float(w_start.w2)))
    alpha = scale_to_transparent(c, eps, trace.w[-1])

    derivs = c.derivatives(nodes, 1)
    a, slope = derivs[0], derivs[1]
    psi_hat = trace.w[:, 0] * a ** -0.25
    eps_dpsi_hat = (
        a ** 0.25 * trace.w[:, 1] - eps * slope / (4.0 * a ** 1.25) * trace.w[:, 0]
    )

    log.debug(
        "solved %s problem: eps=%g, %d nodes, alpha=%s",
        c.kind_label,
        eps,
        len(nodes),
        alpha,
    )
    return HybridSolution(
        coefficient=c,
        eps=eps,
        alpha=complex(alpha),
        nodes=nodes,
        psi=alpha * psi_hat,
        eps_dpsi=alpha * eps_dpsi_hat,
        sampler=sampler,
        phase=table,
        trace=trace,
        ic_scale=ic_scale,
    )


def solve_airy(
    c: Coefficient,
    eps: float,
    grid: typing.Sequence[float],
    phase_method: PhaseMethod,
    ic_scale: float = 1.0,
) -> HybridSolution:
    if c.region_kind != LINEAR:
        raise DomainError("solve_airy needs a linear turning region")
    return _solve(c, eps, grid, phase_method, ic_scale, DEFAULT_MAX_DIGITS)


def solve_pcf(
    c: Coefficient,
    eps: float,
    grid: typing.Sequence[float],
    phase_method: PhaseMethod,
    ic_scale: float = 1.0,
    max_digits: int = DEFAULT_MAX_DIGITS,
) -> HybridSolution:
    if c.region_kind != QUADRATIC:
        raise DomainError("solve_pcf needs a quadratic turning region")
    return _solve(c, eps, grid, phase_method, ic_scale, max_digits)


def solve(
    c: Coefficient,
    eps: float,
    grid: typing.Sequence[float],
    phase_method: PhaseMethod,
    ic_scale: float = 1.0,
    max_digits: int = DEFAULT_MAX_DIGITS,
) -> HybridSolution:
    """dispatch on the turning region of c"""
    if c.region_kind == LINEAR:
        return solve_airy(c, eps, grid, phase_method, ic_scale=ic_scale)
    return solve_pcf(
        c, eps, grid, phase_method, ic_scale=ic_scale, max_digits=max_digits
    )


def observables(sol: HybridSolution, x: float) -> typing.Tuple[float, float]:
    """particle density n = |psi|^2 and current j = eps Im(conj(psi) psi')"""
    psi, eps_dpsi = sol.evaluate(x)
    return float(abs(psi) ** 2), float((np.conj(psi) * eps_dpsi).imag)
