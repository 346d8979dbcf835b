"""
Oscillation-resolving reference integrators for the first-order system

    d/dx psi         = (eps psi') / eps
    d/dx (eps psi')  = -a(x) psi / eps

on [x1, 1]: the Dormand-Prince 5(4) pair with the usual embedded error
controller, and classical fixed-step RK4. Both work on plain floats because
the per-step cost is dominated by interpreter overhead, not arithmetic.
"""
import dataclasses
import logging
import math
import time
import typing

from turnwkb.coefficient import Coefficient
from turnwkb.exc import DomainError, StepUnderflow

log = logging.getLogger(__name__)

DP45 = "dp45"
RK4 = "rk4"

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 5.0
STEP_FLOOR = 1e-14
MAX_BISECTIONS = 12

# Dormand-Prince 5(4): nodes, stage weights, 5th order weights, error weights
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B = (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0)
_E = (
    71 / 57600,
    0.0,
    -71 / 16695,
    71 / 1920,
    -17253 / 339200,
    22 / 525,
    -1 / 40,
)


@dataclasses.dataclass(frozen=True)
class RkMode:
    kind: str
    tol: typing.Optional[float] = None
    step: typing.Optional[float] = None

    @classmethod
    def dp45(cls, tol: float):
        if not tol > 0:
            raise ValueError("dp45 needs a positive tolerance")
        return cls(DP45, tol=float(tol))

    @classmethod
    def rk4(cls, step: float):
        if not step > 0:
            raise ValueError("rk4 needs a positive step")
        return cls(RK4, step=float(step))

    def __str__(self):
        if self.kind == DP45:
            return f"dp45:{self.tol:g}"
        return f"rk4:{self.step:g}"


@dataclasses.dataclass(frozen=True)
class RkRun:
    mode: RkMode
    accepted: int
    rejected: int
    runtime_s: float
    psi: float
    eps_dpsi: float

    @property
    def terminal(self) -> typing.Tuple[float, float]:
        return self.psi, self.eps_dpsi


def _rhs(a, eps):
    inv = 1.0 / eps

    def f(x, y0, y1):
        return y1 * inv, -a(x) * y0 * inv

    return f


def _dp45(f, x0, x_end, y0, y1, tol, h0):
    x = x0
    h = min(h0, x_end - x0)
    accepted = rejected = 0
    k0 = f(x, y0, y1)
    while x < x_end:
        if h < STEP_FLOOR:
            raise StepUnderflow(x, h)
        if x + h > x_end:
            h = x_end - x
        ks = [k0]
        for stage in range(1, 7):
            row = _A[stage]
            s0 = y0 + h * sum(row[j] * ks[j][0] for j in range(stage))
            s1 = y1 + h * sum(row[j] * ks[j][1] for j in range(stage))
            ks.append(f(x + _C[stage] * h, s0, s1))
        # stage 7 is evaluated at the 5th order solution (FSAL)
        n0 = y0 + h * sum(_B[j] * ks[j][0] for j in range(7))
        n1 = y1 + h * sum(_B[j] * ks[j][1] for j in range(7))
        e0 = h * sum(_E[j] * ks[j][0] for j in range(7))
        e1 = h * sum(_E[j] * ks[j][1] for j in range(7))
        sc0 = tol + tol * max(abs(y0), abs(n0))
        sc1 = tol + tol * max(abs(y1), abs(n1))
        err = math.sqrt(((e0 / sc0) ** 2 + (e1 / sc1) ** 2) / 2.0)

        if err <= 1.0:
            x += h
            y0, y1 = n0, n1
            k0 = ks[6]
            accepted += 1
            factor = MAX_FACTOR if err == 0 else SAFETY * err ** -0.2
            h *= min(MAX_FACTOR, max(MIN_FACTOR, factor))
        else:
            rejected += 1
            h *= max(MIN_FACTOR, SAFETY * err ** -0.2)
    return y0, y1, accepted, rejected


def _rk4(f, x0, x_end, y0, y1, step):
    count = max(1, int(round((x_end - x0) / step)))
    h = (x_end - x0) / count
    x = x0
    for n in range(count):
        a0, a1 = f(x, y0, y1)
        b0, b1 = f(x + h / 2, y0 + h / 2 * a0, y1 + h / 2 * a1)
        c0, c1 = f(x + h / 2, y0 + h / 2 * b0, y1 + h / 2 * b1)
        d0, d1 = f(x + h, y0 + h * c0, y1 + h * c1)
        y0 += h / 6 * (a0 + 2 * b0 + 2 * c0 + d0)
        y1 += h / 6 * (a1 + 2 * b1 + 2 * c1 + d1)
        x = x0 + (n + 1) * h
    return y0, y1, count, 0


def rk_solve(
    c: Coefficient,
    eps: float,
    ic: typing.Tuple[float, float],
    mode: RkMode,
    x_end: float = 1.0,
) -> RkRun:
    """integrate (psi, eps psi') from x1 with initial data ic up to x_end"""
    if not eps > 0:
        raise DomainError(f"eps must be positive, got {eps}")
    if not c.x1 < x_end:
        raise DomainError(f"x_end={x_end} must lie right of x1={c.x1}")
    f = _rhs(c.body_a, eps)
    psi0, dpsi0 = float(ic[0]), float(ic[1])

    start = time.perf_counter()
    if mode.kind == DP45:
        # a tenth of the local wavelength
        h0 = 0.1 * eps / math.sqrt(max(c.body_a(c.x1), STEP_FLOOR))
        psi, dpsi, accepted, rejected = _dp45(
            f, c.x1, x_end, psi0, dpsi0, mode.tol, h0
        )
    else:
        psi, dpsi, accepted, rejected = _rk4(f, c.x1, x_end, psi0, dpsi0, mode.step)
    runtime = time.perf_counter() - start

    log.debug(
        "%s at eps=%g: %d accepted, %d rejected, %.3fs",
        mode,
        eps,
        accepted,
        rejected,
        runtime,
    )
    return RkRun(mode, accepted, rejected, runtime, psi, dpsi)


class MatchedTolerance(typing.NamedTuple):
    tol: float
    error: float
    run: RkRun
    iterations: int


def match_tolerance(
    c: Coefficient,
    eps: float,
    ic: typing.Tuple[float, float],
    target_error: float,
    error_fn: typing.Callable[[RkRun], float],
    tol_range: typing.Tuple[float, float] = (1e-14, 1e-3),
) -> MatchedTolerance:
    """
    Bisect log10(tol) until the dp45 error (as measured by error_fn) lands
    within a factor 2 of target_error. The closest run is returned if the
    iteration budget runs out.
    """
    if not target_error > 0:
        raise ValueError("target_error must be positive")
    low, high = (math.log10(t) for t in tol_range)
    best = None
    iterations = 0
    for iterations in range(1, MAX_BISECTIONS + 1):
        middle = (low + high) / 2
        tol = 10.0 ** middle
        run = rk_solve(c, eps, ic, RkMode.dp45(tol))
        error = error_fn(run)
        ratio = error / target_error if error > 0 else 0.0
        if best is None or abs(math.log(max(ratio, 1e-300))) < abs(
            math.log(max(best.error / target_error, 1e-300))
        ):
            best = MatchedTolerance(tol, error, run, iterations)
        if 0.5 <= ratio <= 2.0:
            break
        if ratio > 2.0:
            high = middle
        else:
            low = middle
    log.info(
        "matched dp45 tolerance %.3g at eps=%g after %d iterations",
        best.tol,
        eps,
        iterations,
    )
    return best._replace(iterations=iterations)
