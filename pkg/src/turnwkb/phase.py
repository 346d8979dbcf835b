"""
WKB phase phi(x) = int_{x1}^x (sqrt(a) - eps^2 beta) and its per-interval
increments S_n on a grid.

Increments are always integrated interval by interval; the cumulative phase
is their running sum. The reduced phase theta_n = phi(x_n)/eps mod 2pi is
what the marcher exponentiates.
"""
import dataclasses
import logging
import math
import re
import typing

import numpy as np
from scipy import integrate

from turnwkb.coefficient import Coefficient, exact_phase, phase_derivative
from turnwkb.exc import DomainError, UnsupportedExact

log = logging.getLogger(__name__)

EXACT = "exact"
SIMPSON = "simpson"
ADAPTIVE = "adaptive"

NODE_TOL = 1e-12
TWO_PI = 2.0 * math.pi

_METHOD_RE = re.compile(
    r"^\s*(?P<kind>exact|simpson|adaptive)\s*(?::\s*(?P<arg>[^\s]+))?\s*$",
    re.IGNORECASE,
)


@dataclasses.dataclass(frozen=True)
class PhaseMethod:
    kind: str
    panels: typing.Optional[int] = None
    tol: typing.Optional[float] = None

    def __post_init__(self):
        if self.kind == SIMPSON and not (self.panels and self.panels >= 1):
            raise ValueError("simpson needs a positive panel count")
        if self.kind == ADAPTIVE and not (self.tol and self.tol > 0):
            raise ValueError("adaptive needs a positive tolerance")

    @classmethod
    def exact(cls):
        return cls(EXACT)

    @classmethod
    def simpson(cls, panels: int):
        return cls(SIMPSON, panels=int(panels))

    @classmethod
    def adaptive(cls, tol: float):
        return cls(ADAPTIVE, tol=float(tol))

    def __str__(self):
        if self.kind == SIMPSON:
            return f"simpson:{self.panels}"
        if self.kind == ADAPTIVE:
            return f"adaptive:{self.tol:g}"
        return EXACT


def parse_phase_method(value: str) -> PhaseMethod:
    """
    Parse ``exact``, ``simpson:<m>`` or ``adaptive:<tol>``. A bare ``simpson``
    means one panel per interval; a bare ``adaptive`` means tol=1e-12.
    """
    match = _METHOD_RE.match(value)
    if not match:
        raise ValueError(f"'{value}' is not a phase method")
    kind = match.group("kind").lower()
    arg = match.group("arg")
    if kind == EXACT:
        if arg is not None:
            raise ValueError("'exact' takes no argument")
        return PhaseMethod.exact()
    if kind == SIMPSON:
        return PhaseMethod.simpson(int(arg) if arg is not None else 1)
    return PhaseMethod.adaptive(float(arg) if arg is not None else 1e-12)


@dataclasses.dataclass(frozen=True)
class PhaseTable:
    nodes: np.ndarray
    increments: np.ndarray
    cumulative: np.ndarray
    # phi(x_n)/eps reduced to [0, 2pi)
    theta: np.ndarray
    method: PhaseMethod
    eps: float

    def __len__(self):
        return len(self.nodes)


def _check_nodes(c: Coefficient, nodes: np.ndarray):
    if nodes.ndim != 1 or len(nodes) < 1:
        raise DomainError("phase nodes must be a non-empty 1-d sequence")
    if np.any(np.diff(nodes) < 0):
        raise DomainError("phase nodes must be sorted ascending")
    if nodes[0] < c.x1 - NODE_TOL or nodes[-1] > 1.0 + NODE_TOL:
        raise DomainError(
            f"phase nodes must lie in [x1, 1] = [{c.x1}, 1], "
            f"got [{nodes[0]}, {nodes[-1]}]"
        )


def _simpson_increments(c, eps, left, right, panels):
    # composite Simpson: `panels` panels of three points each
    offsets = np.linspace(0.0, 1.0, 2 * panels + 1)
    weights = np.ones(2 * panels + 1)
    weights[1:-1:2] = 4.0
    weights[2:-1:2] = 2.0
    width = right - left
    points = left[:, None] + width[:, None] * offsets[None, :]
    values = phase_derivative(c, eps, points.ravel()).reshape(points.shape)
    return width / (6.0 * panels) * (values @ weights)


def _adaptive_increments(c, eps, left, right, tol):
    def integrand(s):
        return float(phase_derivative(c, eps, s))

    out = np.empty(len(left))
    for n, (xa, xb) in enumerate(zip(left, right)):
        if xb == xa:
            out[n] = 0.0
            continue
        out[n], _ = integrate.quad(integrand, xa, xb, epsabs=tol, epsrel=tol, limit=200)
    return out


def reduce_phase(increments: np.ndarray, eps: float) -> np.ndarray:
    """theta_n = (sum_{k<n} S_k) / eps mod 2pi, built from reduced increments"""
    steps = np.mod(increments / eps, TWO_PI)
    theta = np.empty(len(increments) + 1)
    theta[0] = 0.0
    acc = 0.0
    for n, step in enumerate(steps, start=1):
        acc = math.fmod(acc + step, TWO_PI)
        theta[n] = acc
    return theta


def build_phase(
    c: Coefficient, eps: float, nodes: typing.Sequence[float], method: PhaseMethod
) -> PhaseTable:
    nodes = np.asarray(nodes, dtype=float)
    _check_nodes(c, nodes)
    left, right = nodes[:-1], nodes[1:]
    log.debug(
        "building %s phase on %d nodes (eps=%g)", method, len(nodes), eps
    )

    if len(left) == 0:
        increments = np.zeros(0)
    elif method.kind == EXACT:
        increments = np.asarray(exact_phase(c, eps, left, right), dtype=float)
    elif method.kind == SIMPSON:
        increments = _simpson_increments(c, eps, left, right, method.panels)
    elif method.kind == ADAPTIVE:
        increments = _adaptive_increments(c, eps, left, right, method.tol)
    else:
        raise UnsupportedExact(f"unknown phase method {method.kind!r}")

    increments = np.atleast_1d(increments)
    positive = right > left
    if np.any(increments[positive] <= 0):
        bad = left[positive][np.argmax(increments[positive] <= 0)]
        raise DomainError(f"phase increment is not positive on the interval at {bad}")
    increments = np.where(positive, increments, 0.0)

    cumulative = np.concatenate(([0.0], np.cumsum(increments)))
    return PhaseTable(
        nodes=nodes,
        increments=increments,
        cumulative=cumulative,
        theta=reduce_phase(increments, eps),
        method=method,
        eps=eps,
    )
