"""
The coefficient a(x) = E - V(x) of eps^2 psi'' + a(x) psi = 0.

A Coefficient is the turning-region formula on [0, x1] (a = x, or
a = k1 x^2 + k2 x) joined to a body on [x1, 1] which can produce a and its
first five derivatives. The beta-chain beta, beta_0..beta_3 is computed by
truncated Taylor (jet) arithmetic, which gives exact chain-rule derivatives
from a..a^(5).
"""
import dataclasses
import functools
import logging
import math
import typing

import numpy as np
from numpy.polynomial import Polynomial
from scipy import integrate

from turnwkb.exc import AssumptionError, DomainError, UnsupportedExact

log = logging.getLogger(__name__)

LINEAR = "linear"
QUADRATIC = "quadratic"
REGION_KINDS = (LINEAR, QUADRATIC)

# a..a^(5)
DERIVATIVE_ORDER = 5
VALIDATION_SAMPLES = 10_000
CONTINUITY_TOL = 1e-12

Real = typing.Union[float, np.ndarray]


class Body(typing.Protocol):
    def derivatives(self, x: np.ndarray, order: int) -> np.ndarray:
        """array of shape (order + 1, len(x)) with a^(k)(x) in row k"""

    def scalar(self, x: float) -> float:
        """a(x) for a single float"""

    def linear_form(self) -> typing.Optional[typing.Tuple[float, float]]:
        """(p, q) if a = p + q x on the body, else None"""


@dataclasses.dataclass(frozen=True)
class PolynomialBody:
    """a(x) = sum coeffs[k] x^k, with exact derivatives of every order"""

    coeffs: typing.Tuple[float, ...]

    def __post_init__(self):
        # trailing zeros would make the degree (and linear_form) lie
        coeffs = list(self.coeffs)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(float(c) for c in coeffs))

    @functools.cached_property
    def _derivs(self):
        poly = Polynomial(self.coeffs)
        return [poly.deriv(k) for k in range(DERIVATIVE_ORDER + 1)]

    def derivatives(self, x, order=DERIVATIVE_ORDER):
        x = np.asarray(x, dtype=float)
        return np.array([self._derivs[k](x) for k in range(order + 1)])

    def scalar(self, x):
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def linear_form(self):
        if len(self.coeffs) > 2:
            return None
        p = self.coeffs[0]
        q = self.coeffs[1] if len(self.coeffs) == 2 else 0.0
        return p, q


@dataclasses.dataclass(frozen=True)
class CallableBody:
    """A body given as six evaluation handles a, a', ..., a^(5)"""

    handles: typing.Tuple[typing.Callable, ...]

    def __post_init__(self):
        if len(self.handles) != DERIVATIVE_ORDER + 1:
            raise ValueError(
                f"CallableBody needs {DERIVATIVE_ORDER + 1} handles, "
                f"got {len(self.handles)}"
            )

    def derivatives(self, x, order=DERIVATIVE_ORDER):
        x = np.asarray(x, dtype=float)
        return np.array(
            [np.broadcast_to(self.handles[k](x), x.shape) for k in range(order + 1)]
        )

    def scalar(self, x):
        return float(self.handles[0](x))

    def linear_form(self):
        return None


@dataclasses.dataclass(frozen=True)
class Coefficient:
    region_kind: str
    x1: float
    body: typing.Any
    k1: typing.Optional[float] = None
    k2: typing.Optional[float] = None

    def __post_init__(self):
        if self.region_kind not in REGION_KINDS:
            raise ValueError(f"unknown region kind {self.region_kind!r}")
        if self.region_kind == QUADRATIC and (self.k1 is None or self.k2 is None):
            raise ValueError("a quadratic turning region needs k1 and k2")

    def region(self, x: Real) -> Real:
        """the turning-region formula, valid on [0, x1]"""
        if self.region_kind == LINEAR:
            return x
        return self.k1 * x * x + self.k2 * x

    def a(self, x: Real) -> Real:
        """a(x) on [0, 1]: region formula up to x1, body beyond"""
        scalar = np.ndim(x) == 0
        x = np.asarray(x, dtype=float)
        values = np.where(
            x <= self.x1, self.region(x), self.body.derivatives(x, 0)[0]
        )
        return float(values) if scalar else values

    def body_a(self, x: float) -> float:
        return self.body.scalar(x)

    def derivatives(self, x: Real, order: int = DERIVATIVE_ORDER) -> np.ndarray:
        """a^(k)(x) of the body for k = 0..order"""
        return self.body.derivatives(np.atleast_1d(np.asarray(x, dtype=float)), order)

    @property
    def kind_label(self) -> str:
        return "airy" if self.region_kind == LINEAR else "pcf"


def airy_linear(x1: float = 0.1) -> Coefficient:
    """a(x) = x on all of [0, 1]"""
    return Coefficient(LINEAR, x1, PolynomialBody((0.0, 1.0)))


def pcf_quadratic(x1: float = 0.1, k1: float = -0.5, k2: float = 1.0) -> Coefficient:
    """a(x) = k1 x^2 + k2 x on all of [0, 1]"""
    return Coefficient(QUADRATIC, x1, PolynomialBody((0.0, k2, k1)), k1=k1, k2=k2)


def from_polynomial(region, x1, body, k1=None, k2=None) -> Coefficient:
    region = region.strip().lower()
    if region not in REGION_KINDS:
        raise AssumptionError([f"region must be one of {REGION_KINDS}, got {region}"])
    if region == QUADRATIC and (k1 is None or k2 is None):
        raise AssumptionError(["a quadratic turning region needs k1 and k2"])
    return Coefficient(region, float(x1), PolynomialBody(tuple(body)), k1=k1, k2=k2)


# truncated Taylor arithmetic; row k of a jet holds f^(k)(x) / k!


def _jet_from_derivatives(derivs):
    factorials = np.array([math.factorial(k) for k in range(len(derivs))], dtype=float)
    return derivs / factorials[:, None]


def _jet_mul(f, g):
    n = min(len(f), len(g))
    out = np.zeros((n,) + f.shape[1:])
    for k in range(n):
        for i in range(k + 1):
            out[k] += f[i] * g[k - i]
    return out


def _jet_div(f, g):
    n = min(len(f), len(g))
    out = np.zeros((n,) + f.shape[1:])
    for k in range(n):
        acc = f[k].copy()
        for i in range(1, k + 1):
            acc -= g[i] * out[k - i]
        out[k] = acc / g[0]
    return out


def _jet_pow(f, r):
    out = np.zeros_like(f)
    out[0] = f[0] ** r
    for k in range(1, len(f)):
        acc = np.zeros_like(f[0])
        for i in range(1, k + 1):
            acc += (r * i - (k - i)) * f[i] * out[k - i]
        out[k] = acc / (k * f[0])
    return out


def _jet_deriv(f):
    return f[1:] * np.arange(1, len(f))[:, None]


class BetaChain(typing.NamedTuple):
    beta: Real
    beta0: Real
    beta1: Real
    beta2: Real
    beta3: Real


def _a_jet(c, x):
    derivs = c.derivatives(x)
    if np.any(derivs[0] <= 0):
        bad = np.atleast_1d(x)[np.argmax(derivs[0] <= 0)]
        raise DomainError(f"a(x) <= 0 at x={bad}")
    return _jet_from_derivatives(derivs)


def _beta_jet(a_jet):
    first = _jet_deriv(a_jet)
    second = _jet_deriv(first)
    order = len(second)
    return -5.0 / 32.0 * _jet_mul(
        _jet_pow(a_jet[:order], -2.5), _jet_mul(first[:order], first[:order])
    ) + 1.0 / 8.0 * _jet_mul(_jet_pow(a_jet[:order], -1.5), second)


def _unwrap(values, scalar):
    if scalar:
        return tuple(float(v[0]) for v in values)
    return tuple(values)


def beta(c: Coefficient, x: Real) -> Real:
    """beta(x) = -(5/32) a^(-5/2) a'^2 + (1/8) a^(-3/2) a''"""
    scalar = np.ndim(x) == 0
    a_jet = _a_jet(c, x)
    value = _beta_jet(a_jet[:3])[0]
    return float(value[0]) if scalar else value


def beta_chain(c: Coefficient, eps: float, x: Real) -> BetaChain:
    """
    beta and beta_0..beta_3 at x, where

        beta_0 = beta / (2 phi'),   beta_{k+1} = beta_k' / (2 phi'),
        phi' = sqrt(a) - eps^2 beta
    """
    scalar = np.ndim(x) == 0
    a_jet = _a_jet(c, x)
    beta_jet = _beta_jet(a_jet)
    dphase = _jet_pow(a_jet[: len(beta_jet)], 0.5) - eps * eps * beta_jet
    if np.any(dphase[0] <= 0):
        bad = np.atleast_1d(x)[np.argmax(dphase[0] <= 0)]
        raise DomainError(f"the phase is not strictly increasing at x={bad}")

    twice = 2.0 * dphase
    b0 = _jet_div(beta_jet, twice)
    b1 = _jet_div(_jet_deriv(b0), twice)
    b2 = _jet_div(_jet_deriv(b1), twice)
    b3 = _jet_div(_jet_deriv(b2), twice)
    values = (beta_jet[0], b0[0], b1[0], b2[0], b3[0])
    return BetaChain(*_unwrap(values, scalar))


def phase_derivative(c: Coefficient, eps: float, x: Real) -> Real:
    """phi'(x) = sqrt(a) - eps^2 beta on the body"""
    b = np.atleast_1d(beta(c, x))
    value = np.sqrt(c.derivatives(x, 0)[0]) - eps * eps * b
    return float(value[0]) if np.ndim(x) == 0 else value


def exact_phase(c: Coefficient, eps: float, xa: Real, xb: Real) -> Real:
    """
    Closed-form phase increment over [xa, xb] for a body a = p + q x.

    With D = a_b^(3/2) - a_a^(3/2) written as q (xb - xa)(a_b^2 + a_a a_b + a_a^2)
    / (a_b^(3/2) + a_a^(3/2)), no difference of nearby powers is ever formed.
    """
    form = c.body.linear_form()
    if form is None:
        raise UnsupportedExact("no closed-form phase is known for this body")
    p, q = form
    xa = np.asarray(xa, dtype=float)
    xb = np.asarray(xb, dtype=float)
    aa = p + q * xa
    ab = p + q * xb
    if np.any(aa <= 0) or np.any(ab <= 0):
        raise DomainError("the exact phase needs a > 0 on the interval")
    ratio = (ab * ab + aa * ab + aa * aa) / (ab ** 1.5 + aa ** 1.5)
    increment = (xb - xa) * ratio * (
        2.0 / 3.0 + eps * eps * 5.0 * q * q / 48.0 / (aa * ab) ** 1.5
    )
    return float(increment) if increment.ndim == 0 else increment


def beta_abs_integral(c: Coefficient, x_from: float, x_to: float) -> float:
    value, _ = integrate.quad(
        lambda s: abs(beta(c, s)), x_from, x_to, epsabs=1e-13, epsrel=1e-12
    )
    return value


def norm_envelope(c: Coefficient, eps: float, x: float) -> typing.Tuple[float, float]:
    """
    Lower and upper growth factors exp(-/+ eps int_{x1}^x |beta|) bounding
    |W(x)| / |W(x1)| for the continuous problem.
    """
    weight = eps * beta_abs_integral(c, c.x1, x)
    return math.exp(-weight), math.exp(weight)


@dataclasses.dataclass(frozen=True)
class EpsBudget:
    eps0: float
    tau1: float
    tau2: float


def _structural_failures(c: Coefficient) -> typing.List[str]:
    failures = []
    if not 0 < c.x1 < 1:
        failures.append(f"switching point x1={c.x1} is not inside (0, 1)")
    if c.region_kind == QUADRATIC:
        if not c.k1 < 0:
            failures.append(f"quadratic region needs k1 < 0, got {c.k1}")
        if not c.k2 > -c.k1 * c.x1 > 0:
            failures.append(
                "quadratic region needs k2 > -k1 x1 > 0 "
                "(second zero strictly right of x1)"
            )
    # linear: a(0) = 0 and a'(0) = 1 by construction; quadratic: a'(0) = k2
    if c.region_kind == QUADRATIC and not (c.k2 or 0) > 0:
        failures.append("turning point at 0 is not first order (a'(0) <= 0)")

    body_at_x1 = c.body.scalar(c.x1)
    region_at_x1 = c.region(c.x1)
    if abs(body_at_x1 - region_at_x1) > CONTINUITY_TOL * max(1.0, abs(region_at_x1)):
        failures.append(
            f"a is not continuous at x1: region gives {region_at_x1!r}, "
            f"body gives {body_at_x1!r}"
        )
    return failures


@functools.lru_cache(maxsize=64)
def _sampled_budget(c: Coefficient) -> typing.Tuple[EpsBudget, typing.List[str]]:
    failures = _structural_failures(c)
    grid = np.linspace(c.x1, 1.0, VALIDATION_SAMPLES)
    a_values = c.body.derivatives(grid, 0)[0]
    tau1 = float(np.min(a_values))
    tau2 = float(np.max(a_values))
    if tau1 <= 0:
        failures.append(f"a is not positive on [x1, 1] (min {tau1:.3e})")
        return EpsBudget(0.0, tau1, tau2), failures

    beta_plus = np.maximum(beta(c, grid), 0.0)
    with np.errstate(divide="ignore"):
        bounds = np.where(
            beta_plus > 0, a_values ** 0.25 / np.sqrt(beta_plus), np.inf
        )
    eps0 = float(min(1.0, np.min(bounds)))
    # sampled minimum less a 1% margin
    return EpsBudget(eps0, 0.99 * tau1, tau2), failures


def validate(c: Coefficient, eps: typing.Optional[float] = None) -> EpsBudget:
    """
    Check the standing assumptions for c (and eps, if given), returning the
    admissible eps budget. Raises AssumptionError listing every failure.
    """
    budget, failures = _sampled_budget(c)
    failures = list(failures)
    if eps is not None:
        if not eps > 0:
            failures.append(f"eps must be positive, got {eps}")
        elif eps > budget.eps0:
            failures.append(
                f"eps={eps} exceeds the admissible bound eps0={budget.eps0:.6g}"
            )
        elif budget.tau1 > 0:
            grid = np.linspace(c.x1, 1.0, VALIDATION_SAMPLES)
            if np.any(phase_derivative(c, eps, grid) <= 0):
                failures.append("the phase is not strictly increasing on [x1, 1]")
    if failures:
        log.debug("assumption failures: %s", failures)
        raise AssumptionError(failures)
    return budget
