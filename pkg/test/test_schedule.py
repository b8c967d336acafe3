from cylnet.schedule.components import (THREADS_VARIABLE, parallel_map, threads_from_env)
import pytest


def square(x: int) -> int:
    return x * x


def test_parallel_map():
    """
    The threaded map keeps the order of the serial one
    """
    items = list(range(10))
    expected = [x * x for x in items]
    assert parallel_map(square, items, n_threads=0) == expected
    assert parallel_map(square, items, n_threads=3) == expected
    assert parallel_map(square, [], n_threads=2) == []


def test_threads_from_env(monkeypatch):
    monkeypatch.delenv(THREADS_VARIABLE, raising=False)
    assert threads_from_env() == 0
    monkeypatch.setenv(THREADS_VARIABLE, "4")
    assert threads_from_env() == 4
    for value in ("-1", "many"):
        monkeypatch.setenv(THREADS_VARIABLE, value)
        with pytest.raises(ValueError):
            threads_from_env()
