import logging
import typing

import numpy as np

from turnwkb.coefficient import LINEAR, Coefficient
from turnwkb.config import NumericsSettings
from turnwkb.exc import DomainError
from turnwkb.specfun import AIRY_ARGMAX

log = logging.getLogger(__name__)


class UniformGrid(typing.NamedTuple):
    nodes: np.ndarray
    h: float
    h_effective: float

    @property
    def intervals(self) -> int:
        return len(self.nodes) - 1


def uniform_grid(x1: float, h: float) -> UniformGrid:
    """
    N = max(1, round((1 - x1)/h)) equal intervals on [x1, 1]; the effective
    step (1 - x1)/N differs from h unless h divides 1 - x1.
    """
    if not h > 0:
        raise DomainError(f"grid step must be positive, got {h}")
    if not 0 <= x1 < 1:
        raise DomainError(f"x1={x1} must lie in [0, 1)")
    count = max(1, int(round((1.0 - x1) / h)))
    nodes = np.linspace(x1, 1.0, count + 1)
    nodes[-1] = 1.0
    log.debug("uniform grid on [%g, 1]: %d intervals for h=%g", x1, count, h)
    return UniformGrid(nodes, h, (1.0 - x1) / count)


def sup_grid(
    c: Coefficient, eps: float, settings: typing.Optional[NumericsSettings] = None
) -> np.ndarray:
    """
    Sample points of [0, x1) for continuum sup-norms. The quadratic region is
    sampled more coarsely (each point costs an arbitrary-precision series),
    with extra points packed into the O(eps^(2/3)) turning layer.
    """
    settings = settings or NumericsSettings()
    layer = min(c.x1, 4.0 * eps ** (2.0 / 3.0))
    peak = -AIRY_ARGMAX * eps ** (2.0 / 3.0)
    if c.region_kind == LINEAR:
        samples = np.linspace(0.0, c.x1, settings.sup_samples, endpoint=False)
    else:
        count = settings.pcf_sup_samples
        coarse = np.linspace(0.0, c.x1, count // 2, endpoint=False)
        dense = np.linspace(0.0, layer, count - count // 2, endpoint=False)
        samples = np.concatenate([coarse, dense])
    if peak < c.x1:
        samples = np.append(samples, peak)
    return np.unique(samples)
