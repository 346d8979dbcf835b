import concurrent.futures

from turnwkb.services import run_sweep


def _square(x):
    return x * x


def test_sequential_sweep():
    assert run_sweep(_square, [3, 1, 2]) == [9, 1, 4]
    assert run_sweep(_square, []) == []


def test_parallel_sweep_keeps_order(monkeypatch):
    # threads stand in for worker processes
    monkeypatch.setattr(
        concurrent.futures, "ProcessPoolExecutor", concurrent.futures.ThreadPoolExecutor
    )
    assert run_sweep(_square, list(range(10)), jobs=3) == [x * x for x in range(10)]
