import logging
import typing

import numpy as np
from scipy import stats

log = logging.getLogger(__name__)

# errors at or below this are dominated by round-off
ROUNDOFF_FLOOR = 1e-11


class SlopeFit(typing.NamedTuple):
    slope: float
    intercept: float
    stderr: float
    ci_low: float
    ci_high: float
    n_points: int

    def to_row(self) -> typing.Dict[str, float]:
        return self._asdict()


def fit_slope(
    xs: typing.Sequence[float],
    ys: typing.Sequence[float],
    floor: typing.Optional[float] = ROUNDOFF_FLOOR,
    confidence: float = 0.95,
) -> SlopeFit:
    """
    Least-squares fit of log(ys) against log(xs), dropping points whose y is
    at or below ``floor``. The interval is a two-sided Student-t interval
    around the slope.
    """
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    if xs.shape != ys.shape:
        raise ValueError("xs and ys must have the same length")
    keep = (xs > 0) & (ys > 0) & np.isfinite(ys)
    if floor is not None:
        keep &= ys > floor
    if np.count_nonzero(keep) < 2:
        raise ValueError(
            f"need at least two points above the floor {floor} to fit a slope"
        )
    log_x, log_y = np.log(xs[keep]), np.log(ys[keep])
    result = stats.linregress(log_x, log_y)
    count = len(log_x)
    if count > 2:
        spread = stats.t.ppf(0.5 + confidence / 2, count - 2) * result.stderr
    else:
        spread = 0.0
    fit = SlopeFit(
        slope=float(result.slope),
        intercept=float(result.intercept),
        stderr=float(result.stderr),
        ci_low=float(result.slope - spread),
        ci_high=float(result.slope + spread),
        n_points=count,
    )
    log.debug("fitted slope %.4f from %d points", fit.slope, count)
    return fit

