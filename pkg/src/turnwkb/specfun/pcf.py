"""
Parabolic cylinder function U(nu, z) for the quadratic turning region
a(x) = k1 x^2 + k2 x, scaled by 1/h(mu) so that values stay O(eps^(-1/6)) even
where U itself overflows double precision.

The arbitrary-precision path evaluates U from its even/odd power series

    U(a, z) = U(a, 0) u1(a, z) + U'(a, 0) u2(a, z)

with confluent hypergeometric u1, u2 and Gamma prefactors, then divides by
h(mu) in log space and rounds to double only at the end.
"""
import functools
import logging
import math
import threading
import typing

import mpmath

from turnwkb.exc import DomainError, PrecisionError
from turnwkb.specfun.airy import airy
from turnwkb.specfun.turning import turning_maps

log = logging.getLogger(__name__)

DEFAULT_MAX_DIGITS = 25000
DEFAULT_GUARD_DIGITS = 20
DEFAULT_STRIP = 1e-3
# above this mu the series needs ~0.43 mu^2 digits; the leading uniform term
# (relative error O(1/mu^2) = O(eps)) is used instead
SERIES_MAX_MU = 32.0

_LOG10_E = math.log10(math.e)

# one mpmath context per thread, never shared
_local = threading.local()


class PcfParameters(typing.NamedTuple):
    nu: float
    z: float
    mu: float
    t: float


class ScaledPcfPair(typing.NamedTuple):
    u_over_h: float
    du_over_h: float
    log_h_mu: float


def h_mu_log(mu: float) -> float:
    """
    ln h(mu) = -(mu^2/4 + 1/4) ln 2 - mu^2/4 + (mu^2/2 - 1/2) ln mu
    """
    if not mu > 0:
        raise DomainError(f"h(mu) needs mu > 0, got {mu}")
    m2 = mu * mu
    return -(m2 / 4 + 0.25) * math.log(2.0) - m2 / 4 + (m2 / 2 - 0.5) * math.log(mu)


def _check_quadratic(k1, k2, eps, x):
    if not k1 < 0:
        raise DomainError(f"k1 must be negative, got {k1}")
    if not k2 > 0:
        raise DomainError(f"k2 must be positive, got {k2}")
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if not (0 <= x and k2 > -k1 * x):
        raise DomainError(
            f"x={x} must lie in [0, {-k2 / k1}) (left of the second turning point)"
        )


def pcf_parameters(k1: float, k2: float, eps: float, x: float) -> PcfParameters:
    """(nu, z(x), mu, t) for a(x) = k1 x^2 + k2 x at the given eps"""
    _check_quadratic(k1, k2, eps, x)
    root = (-(k1 ** 3)) ** 0.25
    mu = k2 / (2.0 * math.sqrt(eps) * root)
    z = (k2 + 2.0 * k1 * x) / (math.sqrt(2.0 * eps) * root)
    t = 1.0 + 2.0 * k1 * x / k2
    return PcfParameters(-mu * mu / 2.0, z, mu, t)


def required_digits(mu: float, guard: int = DEFAULT_GUARD_DIGITS) -> int:
    """decimal working precision needed to absorb the series cancellation"""
    return guard + int(math.ceil(mu * mu * _LOG10_E))


def _context(dps):
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = _local.ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def _pcfu(ctx, a, z):
    """
    U(a, z) at the working precision of ctx, together with the number of
    decimal digits lost when the even and odd parts are combined.
    """
    half = ctx.mpf(1) / 2
    quarter = ctx.mpf(1) / 4
    w = z * z / 2
    damp = ctx.exp(-z * z / 4)
    root_pi = ctx.sqrt(ctx.pi)
    u_at_0 = root_pi * ctx.power(2, -(a / 2 + quarter))
    u_at_0 *= ctx.rgamma(3 * quarter + a / 2)
    du_at_0 = -root_pi * ctx.power(2, -(a / 2 - quarter))
    du_at_0 *= ctx.rgamma(quarter + a / 2)
    even = u_at_0 * ctx.hyp1f1(a / 2 + quarter, half, w)
    odd = du_at_0 * z * ctx.hyp1f1(a / 2 + 3 * quarter, 3 * half, w)
    total = even + odd
    largest = max(abs(even), abs(odd))
    if not total:
        lost = ctx.dps
    elif not largest:
        lost = 0
    else:
        lost = max(0, int(ctx.ceil(ctx.log10(largest / abs(total)))))
    return damp * total, lost


@functools.lru_cache(maxsize=8192)
def scaled_pcfu(
    nu: float, z: float, log_h: float, max_digits: int = DEFAULT_MAX_DIGITS
) -> typing.Tuple[float, float]:
    """
    U(nu, z)/h and U'(nu, z)/h for real nu, z, where ln h = log_h.

    The starting precision follows the size of nu (mu^2 = -2 nu); it is raised
    once more if the even/odd combination cancels more digits than expected.
    """
    dps = required_digits(math.sqrt(max(-2.0 * nu, 0.0)))
    for _ in range(3):
        if dps > max_digits:
            raise PrecisionError(
                f"U({nu:.6g}, z) needs more digits than allowed", dps, max_digits
            )
        log.debug("evaluating U(%.6g, %.6g) with %d digits", nu, z, dps)
        ctx = _context(dps)
        a = ctx.mpf(nu)
        zz = ctx.mpf(z)
        try:
            u, lost = _pcfu(ctx, a, zz)
            u_next, lost_next = _pcfu(ctx, a + 1, zz)
        except (ValueError, ctx.NoConvergence) as err:
            raise PrecisionError(
                f"series for U({nu:.6g}, z) failed: {err}", dps, max_digits
            )
        lost = max(lost, lost_next)
        if dps - lost >= DEFAULT_GUARD_DIGITS:
            break
        log.debug("lost %d of %d digits, raising precision", lost, dps)
        dps = lost + 2 * DEFAULT_GUARD_DIGITS
    else:
        raise PrecisionError(f"U({nu:.6g}, z) did not stabilize", dps, max_digits)

    # U'(a, z) = -(z/2) U(a, z) - (a + 1/2) U(a + 1, z)
    du = -zz / 2 * u - (a + ctx.mpf(1) / 2) * u_next
    scale = ctx.exp(-ctx.mpf(log_h))
    u_over_h, du_over_h = float(u * scale), float(du * scale)
    if not (math.isfinite(u_over_h) and math.isfinite(du_over_h)):
        raise PrecisionError(f"U({nu:.6g}, z)/h is not finite", dps, max_digits)
    return u_over_h, du_over_h


def pcf_scaled(
    k1: float,
    k2: float,
    eps: float,
    x: float,
    max_digits: int = DEFAULT_MAX_DIGITS,
    series_max_mu: float = SERIES_MAX_MU,
) -> ScaledPcfPair:
    """
    U(nu, z(x))/h(mu) and U'(nu, z(x))/h(mu) without intermediate overflow.

    Up to mu = series_max_mu the arbitrary-precision series is used; beyond
    it, pcf_uniform_asymptotic.
    """
    params = pcf_parameters(k1, k2, eps, x)
    if params.mu > series_max_mu:
        log.debug(
            "mu=%.4g above %.4g, using the uniform expansion", params.mu, series_max_mu
        )
        return pcf_uniform_asymptotic(k1, k2, eps, x)
    log_h = h_mu_log(params.mu)
    u, du = scaled_pcfu(params.nu, params.z, log_h, max_digits)
    return ScaledPcfPair(u, du, log_h)


def pcf_scaled_ic(
    k1: float, k2: float, eps: float, x: float, max_digits: int = DEFAULT_MAX_DIGITS
) -> typing.Tuple[float, float]:
    """(psi, eps*psi') at x for psi(x) = U(nu, z(x))/h(mu)"""
    pair = pcf_scaled(k1, k2, eps, x, max_digits=max_digits)
    return pair.u_over_h, -math.sqrt(2.0 * eps) * (-k1) ** 0.25 * pair.du_over_h


def pcf_uniform_asymptotic(
    k1: float, k2: float, eps: float, x: float, strip: float = DEFAULT_STRIP
) -> ScaledPcfPair:
    """
    Leading term of the Airy-type uniform expansion, with f(mu) = 1:

        U/h  ~ 2 sqrt(pi) mu^(1/3) varphi(t) Ai(mu^(4/3) zeta(t))
        U'/h ~ sqrt(2 pi) mu^(2/3) Ai'(mu^(4/3) zeta(t)) / varphi(t)

    Valid for t in [-1 + strip, 1], turning point included.
    """
    params = pcf_parameters(k1, k2, eps, x)
    if params.t < -1.0 + strip:
        raise DomainError(
            f"t={params.t} is outside the uniform strip [{-1.0 + strip}, 1]"
        )
    maps = turning_maps(params.t)
    mu = params.mu
    pair = airy(mu ** (4.0 / 3.0) * maps.zeta)
    u = 2.0 * math.sqrt(math.pi) * mu ** (1.0 / 3.0) * maps.varphi * pair.ai
    du = math.sqrt(2.0 * math.pi) * mu ** (2.0 / 3.0) * pair.ai_prime / maps.varphi
    return ScaledPcfPair(u, du, h_mu_log(mu))


def pcf_leading_form(
    k1: float, k2: float, eps: float, x: float
) -> typing.Tuple[float, float]:
    """
    Oscillatory leading form away from both turning points (f(mu) = 1):

        U/h            ~  2 (1-t^2)^(-1/4) cos(eta - pi/4)
        eps d/dx U/h   ~ -(k2/sqrt(-k1)) (1-t^2)^(1/4) sin(eta - pi/4)

    with eta(t) = (mu^2/2)(arccos t - t sqrt(1-t^2)).
    """
    params = pcf_parameters(k1, k2, eps, x)
    t = params.t
    if not -1.0 < t < 1.0:
        raise DomainError(f"the leading form needs -1 < t < 1, got {t}")
    one_minus = 1.0 - t * t
    eta = params.mu ** 2 / 2.0 * (math.acos(t) - t * math.sqrt(one_minus))
    u = 2.0 * one_minus ** -0.25 * math.cos(eta - math.pi / 4)
    eps_du = -(k2 / math.sqrt(-k1)) * one_minus ** 0.25 * math.sin(eta - math.pi / 4)
    return u, eps_du
