import concurrent.futures
import logging
import typing

log = logging.getLogger(__name__)

T = typing.TypeVar("T")
R = typing.TypeVar("R")


def run_sweep(
    fn: typing.Callable[[T], R], points: typing.Sequence[T], jobs: int = 1
) -> typing.List[R]:
    """
    Map fn over the sweep points, in worker processes when jobs > 1. Results
    come back in the order of ``points`` regardless of completion order.
    """
    points = list(points)
    if jobs <= 1 or len(points) <= 1:
        results = []
        for index, point in enumerate(points, start=1):
            log.info("sweep point %d/%d", index, len(points))
            results.append(fn(point))
        return results

    log.info("running %d sweep points on %d workers", len(points), jobs)
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, points))
