"""
Airy functions on the real line.

Two evaluation paths are used:

- near the origin (z >= -crossover) values come from scipy.special.airy
- on the far oscillatory side (z < -crossover) the Poincare expansion of
  Ai(-x), Ai'(-x) is summed up to its smallest term

With the default crossover of 8.0 the smallest term of the expansion is below
1e-13, so the two paths agree to roughly machine precision in the overlap.
For large |z| the phase xi - pi/4 is reduced in mpmath so that rounding of
xi does not leak into the oscillation.
"""
import logging
import math
import typing

import mpmath
import numpy as np
from scipy import special

from turnwkb.exc import DomainError

log = logging.getLogger(__name__)

AIRY_CROSSOVER = 8.0

# location of the maximum of Ai on z < 0 (first zero of Ai')
AIRY_ARGMAX = -1.0187929716474710

# the expansion is never summed past this many terms
_MAX_TERMS = 60

# above this xi the double-precision phase loses more than 1e-13 absolute
_PHASE_REDUCE_ABOVE = 500.0
_PHASE_CTX = mpmath.MPContext()
_PHASE_CTX.dps = 40

Real = typing.Union[float, np.ndarray]


class AiryPair(typing.NamedTuple):
    ai: Real
    ai_prime: Real


def _asymptotic_coefficients(n):
    """u_k and v_k of the large-argument expansion, k = 0..n-1"""
    u = np.empty(n)
    v = np.empty(n)
    u[0] = v[0] = 1.0
    for k in range(1, n):
        u[k] = (
            u[k - 1]
            * (6 * k - 5)
            * (6 * k - 3)
            * (6 * k - 1)
            / ((2 * k - 1) * 216.0 * k)
        )
        v[k] = -(6 * k + 1) / (6 * k - 1) * u[k]
    return u, v


_U_COEFFS, _V_COEFFS = _asymptotic_coefficients(_MAX_TERMS)


def _airy_near(z):
    ai, aip, _, _ = special.airy(z)
    return ai, aip


def _reduced_phase(x, xi):
    """xi - pi/4, reduced modulo 2 pi in extended precision where xi is large"""
    theta = xi - math.pi / 4
    large = xi > _PHASE_REDUCE_ABOVE
    if np.any(large):
        ctx = _PHASE_CTX
        two_pi = 2 * ctx.pi
        theta[large] = [
            float((2 * ctx.mpf(v) * ctx.sqrt(v) / 3 - ctx.pi / 4) % two_pi)
            for v in x[large]
        ]
    return theta


def _airy_far(z):
    """
    Ai(z), Ai'(z) for z < 0 from the expansion in xi = (2/3)|z|^(3/2),
    truncated at the smallest term.
    """
    x = -np.asarray(z, dtype=float)
    if np.any(x <= 0):
        raise DomainError("the asymptotic Airy path needs z < 0")
    xi = (2.0 / 3.0) * x * np.sqrt(x)
    theta = _reduced_phase(x, xi)
    c, s = np.cos(theta), np.sin(theta)

    # even/odd partial sums for the u and v series
    pu, qu = np.ones_like(xi), np.zeros_like(xi)
    pv, qv = np.ones_like(xi), np.zeros_like(xi)
    active = np.ones_like(xi, dtype=bool)
    prev = np.ones_like(xi)
    power = np.ones_like(xi)
    for k in range(1, _MAX_TERMS):
        power = power / xi
        term = _U_COEFFS[k] * power
        # optimal truncation: stop once terms start growing again
        active &= (np.abs(term) < prev) & (np.abs(term) > 1e-18)
        if not np.any(active):
            break
        sign = -1.0 if (k // 2) % 2 else 1.0
        tu = np.where(active, sign * term, 0.0)
        tv = np.where(active, sign * _V_COEFFS[k] * power, 0.0)
        if k % 2:
            qu += tu
            qv += tv
        else:
            pu += tu
            pv += tv
        prev = np.abs(term)

    root = 1.0 / math.sqrt(math.pi)
    ai = root * x ** -0.25 * (c * pu + s * qu)
    aip = root * x ** 0.25 * (s * pv - c * qv)
    return ai, aip


def airy(z: Real, crossover: float = AIRY_CROSSOVER) -> AiryPair:
    """
    Ai and Ai' at real z. Scalars in give floats out; arrays in give arrays out.
    """
    scalar = np.ndim(z) == 0
    z = np.atleast_1d(np.asarray(z, dtype=float))
    if not np.all(np.isfinite(z)):
        raise DomainError("airy() needs finite arguments")

    far = z < -crossover
    ai = np.empty_like(z)
    aip = np.empty_like(z)
    if np.any(~far):
        ai[~far], aip[~far] = _airy_near(z[~far])
    if np.any(far):
        ai[far], aip[far] = _airy_far(z[far])

    if scalar:
        return AiryPair(float(ai[0]), float(aip[0]))
    return AiryPair(ai, aip)


def airy_bi(z: Real) -> AiryPair:
    """Bi and Bi' at real z, packed as an AiryPair"""
    _, _, bi, bip = special.airy(z)
    if np.ndim(z) == 0:
        return AiryPair(float(bi), float(bip))
    return AiryPair(bi, bip)


def _check_eps(eps):
    if not 0 < eps <= 1:
        raise DomainError(f"eps must lie in (0, 1], got {eps}")


def airy_scaled_ic(x: Real, eps: float) -> typing.Tuple[Real, Real]:
    """
    The eps-balanced Airy data (psi, eps*psi') at x:

        psi       =  eps^(-1/6) Ai(-x eps^(-2/3))
        eps*psi'  = -eps^(1/6)  Ai'(-x eps^(-2/3))
    """
    _check_eps(eps)
    pair = airy(-np.asarray(x, dtype=float) * eps ** (-2.0 / 3.0))
    psi = eps ** (-1.0 / 6.0) * pair.ai
    eps_dpsi = -(eps ** (1.0 / 6.0)) * pair.ai_prime
    if np.ndim(x) == 0:
        return float(psi), float(eps_dpsi)
    return psi, eps_dpsi


def airy_oscillatory_leading(x: Real, eps: float) -> typing.Tuple[Real, Real]:
    """
    Leading oscillatory form of airy_scaled_ic for fixed x > 0 as eps -> 0:

        psi      ~  pi^(-1/2) x^(-1/4) cos(xi)
        eps*psi' ~ -pi^(-1/2) x^(1/4)  sin(xi),   xi = (2/3) x^(3/2) / eps - pi/4
    """
    _check_eps(eps)
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0):
        raise DomainError("the oscillatory representation needs x > 0")
    xi = (2.0 / 3.0) * x ** 1.5 / eps - math.pi / 4
    root = 1.0 / math.sqrt(math.pi)
    psi = root * x ** -0.25 * np.cos(xi)
    eps_dpsi = -root * x ** 0.25 * np.sin(xi)
    if np.ndim(x) == 0:
        return float(psi), float(eps_dpsi)
    return psi, eps_dpsi
