"""Unit tests for the grid-point executors."""

from __future__ import annotations

import time
from functools import partial

import pytest

from symlab.errors import DomainError
from symlab.experiments.executor import (
    AsyncExecutor,
    ScanTask,
    SequentialExecutor,
    make_executor,
)


def square(n: int) -> int:
    return n * n


def slow_square(n: int) -> int:
    time.sleep(0.01 * (5 - n))
    return n * n


def reject(n: int) -> int:
    raise DomainError(f"rejected {n}")


def tasks_for(fn, values) -> list[ScanTask]:
    return [ScanTask(name=f"n={n}", run=partial(fn, n)) for n in values]


class TestSequentialExecutor:
    """Tests for SequentialExecutor."""

    def test_grid_order(self):
        """Results come back in task order."""
        results = SequentialExecutor(tasks_for(square, range(5))).execute()
        assert [r.value for r in results] == [0, 1, 4, 9, 16]
        assert all(r.status == "passed" for r in results)

    def test_failure_recorded(self):
        """A SymlabError marks the point failed with its message."""
        tasks = tasks_for(square, [1]) + tasks_for(reject, [2]) + tasks_for(square, [3])
        results = SequentialExecutor(tasks).execute()
        assert [r.status for r in results] == ["passed", "failed", "passed"]
        assert results[1].error == "DomainError: rejected 2"

    def test_max_failures(self):
        """Points after the threshold are skipped."""
        tasks = tasks_for(reject, [1, 2]) + tasks_for(square, [3])
        results = SequentialExecutor(tasks, max_failures=1).execute()
        assert [r.status for r in results] == ["failed", "skipped", "skipped"]

    def test_other_errors_propagate(self):
        """Only SymlabError is captured."""
        task = ScanTask(name="boom", run=lambda: 1 // 0)
        with pytest.raises(ZeroDivisionError):
            SequentialExecutor([task]).execute()


class TestAsyncExecutor:
    """Tests for AsyncExecutor."""

    def test_grid_order_despite_completion_order(self):
        """Later tasks finish first but results stay in grid order."""
        results = AsyncExecutor(tasks_for(slow_square, range(5)), max_parallel=5).execute()
        assert [r.index for r in results] == list(range(5))
        assert [r.value for r in results] == [0, 1, 4, 9, 16]

    def test_matches_sequential(self):
        """Pool and sequential runs agree."""
        tasks = tasks_for(square, range(20))
        pooled = [r.value for r in AsyncExecutor(tasks, max_parallel=4).execute()]
        sequential = [r.value for r in SequentialExecutor(tasks).execute()]
        assert pooled == sequential

    def test_failure_recorded(self):
        """Failures are captured per point."""
        tasks = tasks_for(square, [1]) + tasks_for(reject, [2])
        results = AsyncExecutor(tasks, max_parallel=2).execute()
        assert [r.status for r in results] == ["passed", "failed"]

    def test_empty(self):
        """No tasks, no results."""
        assert AsyncExecutor([]).execute() == []


class TestMakeExecutor:
    """Tests for make_executor()."""

    def test_choice(self):
        """Sequential unless max_parallel > 1."""
        tasks = tasks_for(square, [1])
        assert isinstance(make_executor(tasks, None), SequentialExecutor)
        assert isinstance(make_executor(tasks, 1), SequentialExecutor)
        assert isinstance(make_executor(tasks, 3), AsyncExecutor)
