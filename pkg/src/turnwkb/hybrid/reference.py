"""
Closed-form scattering solutions for coefficients that equal their turning
region formula on all of [0, 1], and the sup-norm errors of a hybrid solution
measured against them.

For such coefficients the exact solution is alpha_ex * psi_- on all of [0, 1],
with alpha_ex fixed by the transparent condition at x = 1. This gives the
linear case

    psi(x) = 2 eps^(-1/6) Ai(-x eps^(-2/3)) / (eps^(-1/6) Ai(-eps^(-2/3))
                                                - i eps^(1/6) Ai'(-eps^(-2/3)))

and the quadratic case

    psi(x) = 2 U(nu, z(x)) / (U(nu, 0) - i sqrt(eps) 2^(3/4) U'(nu, 0))

for a(x) = x - x^2/2.
"""
import dataclasses
import functools
import logging
import typing

import numpy as np

from turnwkb.coefficient import (
    LINEAR,
    Coefficient,
    PolynomialBody,
    airy_linear,
    pcf_quadratic,
)
from turnwkb.exc import SingularAlpha, UnsupportedExact
from turnwkb.hybrid.samplers import sampler_for
from turnwkb.hybrid.solution import ALPHA_FLOOR, HybridSolution
from turnwkb.specfun import DEFAULT_MAX_DIGITS

log = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class ExactSolution:
    coefficient: Coefficient
    eps: float
    alpha: complex
    sampler: typing.Callable

    def evaluate(self, x) -> typing.Tuple[np.ndarray, np.ndarray]:
        """(psi, eps*psi') of the exact solution at any x in [0, 1]"""
        psi, eps_dpsi = self.sampler(np.asarray(x, dtype=float))
        return self.alpha * np.asarray(psi), self.alpha * np.asarray(eps_dpsi)


def _region_body(c: Coefficient):
    if c.region_kind == LINEAR:
        return PolynomialBody((0.0, 1.0))
    return PolynomialBody((0.0, c.k2, c.k1))


@functools.lru_cache(maxsize=64)
def exact_for(
    c: Coefficient, eps: float, max_digits: int = DEFAULT_MAX_DIGITS
) -> ExactSolution:
    if not isinstance(c.body, PolynomialBody) or c.body != _region_body(c):
        raise UnsupportedExact(
            "a closed-form solution needs the body to equal the turning region"
        )
    sampler = sampler_for(c, eps, max_digits=max_digits)
    psi1, eps_dpsi1 = sampler(1.0)
    root = np.sqrt(c.body_a(1.0))
    denominator = eps_dpsi1 - 1j * root * psi1
    if abs(denominator) < ALPHA_FLOOR:
        raise SingularAlpha("the exact solution cannot be scaled at x=1")
    alpha = complex(-2j * root / denominator)
    log.debug("exact %s solution at eps=%g: alpha=%s", c.kind_label, eps, alpha)
    return ExactSolution(c, eps, alpha, sampler)


def exact_airy(eps: float, x1: float = 0.1) -> ExactSolution:
    """the a(x) = x solution; x1 only labels the coefficient"""
    return exact_for(airy_linear(x1), eps)


def exact_pcf(
    eps: float,
    x1: float = 0.1,
    k1: float = -0.5,
    k2: float = 1.0,
    max_digits: int = DEFAULT_MAX_DIGITS,
) -> ExactSolution:
    """the a(x) = k1 x^2 + k2 x solution; x1 only labels the coefficient"""
    return exact_for(pcf_quadratic(x1, k1, k2), eps, max_digits=max_digits)


@dataclasses.dataclass(frozen=True)
class ErrorRecord:
    kind: str
    eps: float
    h: float
    h_effective: float
    phase_method: str
    err_psi_inf: float
    err_eps_dpsi_inf: float
    runtime_s: float

    def __post_init__(self):
        if self.err_psi_inf < 0 or self.err_eps_dpsi_inf < 0:
            raise ValueError("errors must be nonnegative")

    @property
    def err_total(self) -> float:
        """||e_h||_inf + eps ||e_h'||_inf"""
        return self.err_psi_inf + self.err_eps_dpsi_inf

    def to_row(self) -> typing.Dict[str, typing.Any]:
        return dict(dataclasses.asdict(self), err_total=self.err_total)


def solution_errors(
    sol: HybridSolution, exact: ExactSolution, samples: np.ndarray
) -> typing.Tuple[float, float]:
    """
    Sup-norm errors of psi and eps*psi' over [0, 1]: the continuum part on
    [0, x1] and the grid maximum on the nodes.

    Both solutions share psi_- on [0, x1], so the continuum part is exactly
    |alpha_ex - alpha_h| times the sup of |psi_-| (resp. |eps psi_-'|).
    """
    psi_minus, eps_dpsi_minus = sol.sampler(np.asarray(samples, dtype=float))
    gap = abs(exact.alpha - sol.alpha * sol.ic_scale)
    left_psi = gap * float(np.max(np.abs(psi_minus), initial=0.0))
    left_dpsi = gap * float(np.max(np.abs(eps_dpsi_minus), initial=0.0))

    psi_ex, eps_dpsi_ex = exact.evaluate(sol.nodes)
    grid_psi = float(np.max(np.abs(sol.psi - psi_ex)))
    grid_dpsi = float(np.max(np.abs(sol.eps_dpsi - eps_dpsi_ex)))
    return max(left_psi, grid_psi), max(left_dpsi, grid_dpsi)


def error_record(
    sol: HybridSolution,
    exact: ExactSolution,
    h: float,
    runtime_s: float = 0.0,
    samples: typing.Optional[np.ndarray] = None,
) -> ErrorRecord:
    if samples is None:
        samples = sol.default_samples()
    err_psi, err_dpsi = solution_errors(sol, exact, samples)
    h_effective = float(np.max(np.diff(sol.nodes)))
    return ErrorRecord(
        kind=sol.kind,
        eps=sol.eps,
        h=h,
        h_effective=h_effective,
        phase_method=str(sol.phase_method),
        err_psi_inf=err_psi,
        err_eps_dpsi_inf=err_dpsi,
        runtime_s=runtime_s,
    )
