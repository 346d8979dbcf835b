"""
Exact scattering solutions for two-piece coefficients.

The left piece contributes its turning-point solution (decaying into the
classically forbidden side); the right piece contributes two independent
closed-form solutions. Their amplitudes follow from C1 matching at the
interface, and the transparent condition at x = 1 fixes the overall scale.
No numerical integration is involved.
"""
import dataclasses
import logging
import math
import typing

import numpy as np

from turnwkb.exc import DomainError, SingularMatch
from turnwkb.specfun import (
    DEFAULT_MAX_DIGITS,
    airy_bi,
    airy_scaled_ic,
    h_mu_log,
    pcf_parameters,
    scaled_pcfu,
)

log = logging.getLogger(__name__)

AIRY_LINEAR = "airy-linear"
PCF_QUADRATIC = "pcf-quadratic"
PIECE_KINDS = (AIRY_LINEAR, PCF_QUADRATIC)

MATCH_FLOOR = 1e-300

Pair = typing.Tuple[float, float]


@dataclasses.dataclass(frozen=True)
class AnalyticPiece:
    """a(x) = x (airy-linear) or a(x) = k1 x^2 + k2 x (pcf-quadratic)"""

    kind: str
    k1: float = -0.5
    k2: float = 1.0
    max_digits: int = DEFAULT_MAX_DIGITS

    def __post_init__(self):
        if self.kind not in PIECE_KINDS:
            raise ValueError(f"unknown piece kind {self.kind!r}")

    def a(self, x: float) -> float:
        if self.kind == AIRY_LINEAR:
            return x
        return self.k1 * x * x + self.k2 * x

    def primary(self, eps: float, x: float) -> Pair:
        """(f, eps f') of the solution decaying into x < 0"""
        if self.kind == AIRY_LINEAR:
            return airy_scaled_ic(x, eps)
        return self._pcf(eps, x, 1.0)

    def secondary(self, eps: float, x: float) -> Pair:
        """(g, eps g') of a second, independent solution"""
        if self.kind == AIRY_LINEAR:
            pair = airy_bi(-x * eps ** (-2.0 / 3.0))
            return eps ** (-1.0 / 6.0) * pair.ai, -(eps ** (1.0 / 6.0)) * pair.ai_prime
        return self._pcf(eps, x, -1.0)

    def _pcf(self, eps, x, sign):
        # U(nu, sign * z(x)) / h(mu); d/dx z = -sqrt(2/eps) (-k1)^(1/4)
        params = pcf_parameters(self.k1, self.k2, eps, x)
        u, du = scaled_pcfu(
            params.nu, sign * params.z, h_mu_log(params.mu), self.max_digits
        )
        return u, -sign * math.sqrt(2.0 * eps) * (-self.k1) ** 0.25 * du


@dataclasses.dataclass(frozen=True)
class TwoPieceSolution:
    left: AnalyticPiece
    right: AnalyticPiece
    interface: float
    eps: float
    amplitudes: typing.Tuple[float, float]
    alpha: complex

    def evaluate(self, x: float) -> typing.Tuple[complex, complex]:
        """(psi, eps*psi') at x"""
        if x <= self.interface:
            psi, eps_dpsi = self.left.primary(self.eps, x)
        else:
            first, second = self.amplitudes
            f, df = self.right.primary(self.eps, x)
            g, dg = self.right.secondary(self.eps, x)
            psi, eps_dpsi = first * f + second * g, first * df + second * dg
        return self.alpha * psi, self.alpha * eps_dpsi

    def evaluate_many(self, xs: typing.Iterable[float]) -> np.ndarray:
        """psi at each x, as a complex array"""
        return np.array([self.evaluate(float(x))[0] for x in xs], dtype=complex)


def match_two_piece(
    left: AnalyticPiece, right: AnalyticPiece, interface: float, eps: float
) -> TwoPieceSolution:
    if not 0 <= interface < 1:
        raise DomainError(f"interface {interface} must lie in [0, 1)")
    l_val, l_der = left.primary(eps, interface)
    f, df = right.primary(eps, interface)
    g, dg = right.secondary(eps, interface)
    det = f * dg - g * df
    if abs(det) < MATCH_FLOOR:
        raise SingularMatch(f"matching determinant {det:.3e} at x={interface}")
    first = (l_val * dg - g * l_der) / det
    second = (f * l_der - l_val * df) / det

    f1, df1 = right.primary(eps, 1.0)
    g1, dg1 = right.secondary(eps, 1.0)
    psi1 = first * f1 + second * g1
    eps_dpsi1 = first * df1 + second * dg1
    root = math.sqrt(right.a(1.0))
    denominator = eps_dpsi1 - 1j * root * psi1
    if abs(denominator) < MATCH_FLOOR:
        raise SingularMatch("the matched solution cannot be scaled at x=1")
    alpha = -2j * root / denominator
    log.debug(
        "matched %s|%s at x=%g (eps=%g): amplitudes (%.6g, %.6g)",
        left.kind,
        right.kind,
        interface,
        eps,
        first,
        second,
    )
    return TwoPieceSolution(
        left, right, interface, eps, (float(first), float(second)), complex(alpha)
    )
