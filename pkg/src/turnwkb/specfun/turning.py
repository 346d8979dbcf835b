import math
import typing

from turnwkb.exc import DomainError

# below this distance from t=1 the analytic limit of varphi is returned
TURNING_LIMIT_BAND = 1e-8

VARPHI_AT_ONE = 2.0 ** (-1.0 / 6.0)


class TurningMaps(typing.NamedTuple):
    zeta: float
    varphi: float


def zeta(t: float) -> float:
    """
    zeta(t) = -((3/4) arccos t - (3t/4) sqrt(1 - t^2))^(2/3) on [-1, 1]
    """
    if not -1.0 <= t <= 1.0:
        raise DomainError(f"zeta(t) is defined on [-1, 1], got t={t}")
    # with t = cos(u/2): arccos t - t sqrt(1-t^2) = (u - sin u) / 2
    u = 2.0 * math.acos(t)
    if u < 0.1:
        u2 = u * u
        nested = 1.0 - u2 / 42.0 * (1.0 - u2 / 72.0)
        u_minus_sin = u * u2 / 6.0 * (1.0 - u2 / 20.0 * nested)
    else:
        u_minus_sin = u - math.sin(u)
    return -((0.375 * u_minus_sin) ** (2.0 / 3.0))


def turning_maps(t: float) -> TurningMaps:
    """
    The Airy-type variable zeta(t) and the amplitude factor
    varphi(t) = (-zeta / (1 - t^2))^(1/4) of the uniform expansion.
    """
    if not -1.0 < t <= 1.0:
        raise DomainError(f"turning_maps(t) is defined on (-1, 1], got t={t}")
    z = zeta(t)
    if 1.0 - t < TURNING_LIMIT_BAND:
        return TurningMaps(z, VARPHI_AT_ONE)
    return TurningMaps(z, (-z / (1.0 - t * t)) ** 0.25)
