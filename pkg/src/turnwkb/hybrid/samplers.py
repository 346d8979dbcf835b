"""
Analytic solutions psi_- on the turning region [0, x1], evaluated on demand.

Each sampler returns (psi, eps*psi') as real values and knows the turning
region it belongs to. These are the IVP initial data at x1 and the solution
extension on [0, x1].
"""
import dataclasses
import logging
import typing

import numpy as np

from turnwkb.coefficient import LINEAR, Coefficient
from turnwkb.specfun import DEFAULT_MAX_DIGITS, airy_scaled_ic, pcf_scaled_ic

log = logging.getLogger(__name__)

Real = typing.Union[float, np.ndarray]


@dataclasses.dataclass(frozen=True)
class AirySampler:
    """psi_-(x) = eps^(-1/6) Ai(-x eps^(-2/3)) for a(x) = x"""

    eps: float
    kind: str = "airy"

    def __call__(self, x: Real) -> typing.Tuple[Real, Real]:
        return airy_scaled_ic(x, self.eps)


@dataclasses.dataclass(frozen=True)
class PcfSampler:
    """psi_-(x) = U(nu, z(x)) / h(mu) for a(x) = k1 x^2 + k2 x"""

    k1: float
    k2: float
    eps: float
    max_digits: int = DEFAULT_MAX_DIGITS
    kind: str = "pcf"

    def _one(self, x):
        return pcf_scaled_ic(self.k1, self.k2, self.eps, x, max_digits=self.max_digits)

    def __call__(self, x: Real) -> typing.Tuple[Real, Real]:
        if np.ndim(x) == 0:
            return self._one(float(x))
        values = np.array([self._one(float(s)) for s in np.asarray(x).ravel()])
        shape = np.shape(x)
        return values[:, 0].reshape(shape), values[:, 1].reshape(shape)


def sampler_for(
    c: Coefficient, eps: float, max_digits: int = DEFAULT_MAX_DIGITS
) -> typing.Union[AirySampler, PcfSampler]:
    if c.region_kind == LINEAR:
        return AirySampler(eps)
    return PcfSampler(c.k1, c.k2, eps, max_digits=max_digits)
