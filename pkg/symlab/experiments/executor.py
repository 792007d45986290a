"""Grid-point executors for scans.

Provides SequentialExecutor for single-threaded evaluation and
AsyncExecutor for sliding-window parallel evaluation in a thread pool.
Both return results in grid order, whatever the completion order, and
both honour a max_failures threshold.
"""

from __future__ import annotations

import asyncio
import os
import time
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from symlab.errors import SymlabError


@dataclass(frozen=True)
class ScanTask:
    """One grid point: a name and the computation producing its row(s)."""

    name: str
    run: Callable[[], Any]


@dataclass
class PointResult:
    """Result of evaluating a single grid point."""

    name: str
    index: int
    status: str  # passed, failed, skipped
    value: Any = None
    error: str = ""
    duration: float = 0.0


def _run_task(index: int, task: ScanTask) -> PointResult:
    start_time = time.monotonic()
    try:
        value = task.run()
    except SymlabError as e:
        return PointResult(
            name=task.name,
            index=index,
            status="failed",
            error=f"{type(e).__name__}: {e}",
            duration=time.monotonic() - start_time,
        )
    return PointResult(
        name=task.name,
        index=index,
        status="passed",
        value=value,
        duration=time.monotonic() - start_time,
    )


def _skipped(index: int, task: ScanTask) -> PointResult:
    return PointResult(name=task.name, index=index, status="skipped", error="max_failures reached")


class SequentialExecutor:
    """Evaluates grid points one after another in grid order."""

    def __init__(self, tasks: Sequence[ScanTask], max_failures: int | None = None) -> None:
        self.tasks = list(tasks)
        self.max_failures = max_failures
        self._failure_count = 0

    def execute(self) -> list[PointResult]:
        """Evaluate every task.

        Returns:
            One PointResult per task, in grid order. Tasks after the
            failure threshold is reached are marked ``skipped``.
        """
        results: list[PointResult] = []
        for index, task in enumerate(self.tasks):
            if self.max_failures is not None and self._failure_count >= self.max_failures:
                results.append(_skipped(index, task))
                continue
            result = _run_task(index, task)
            if result.status == "failed":
                self._failure_count += 1
            results.append(result)
        return results


class AsyncExecutor:
    """Evaluates grid points in parallel using asyncio with a sliding window.

    A semaphore limits concurrency to max_parallel points; each point runs
    in the default thread pool. Results are reassembled in grid order so
    the report is single-writer and independent of scheduling.
    """

    def __init__(
        self,
        tasks: Sequence[ScanTask],
        max_parallel: int | None = None,
        max_failures: int | None = None,
    ) -> None:
        self.tasks = list(tasks)
        self.max_parallel = max_parallel or os.cpu_count() or 4
        self.max_failures = max_failures
        self._failure_count = 0

    def execute(self) -> list[PointResult]:
        return asyncio.run(self._execute_async())

    async def _execute_async(self) -> list[PointResult]:
        if not self.tasks:
            return []

        semaphore = asyncio.Semaphore(self.max_parallel)
        lock = asyncio.Lock()
        stop = asyncio.Event()
        loop = asyncio.get_running_loop()

        async def run_point(index: int, task: ScanTask) -> PointResult:
            async with semaphore:
                if stop.is_set():
                    return _skipped(index, task)
                result = await loop.run_in_executor(None, _run_task, index, task)
                async with lock:
                    if result.status == "failed":
                        self._failure_count += 1
                        if (
                            self.max_failures is not None
                            and self._failure_count >= self.max_failures
                        ):
                            stop.set()
                return result

        results = await asyncio.gather(
            *(run_point(i, task) for i, task in enumerate(self.tasks))
        )
        return sorted(results, key=lambda r: r.index)


def make_executor(tasks: Sequence[ScanTask], max_parallel: int | None) -> SequentialExecutor | AsyncExecutor:
    """Sequential when max_parallel is unset or 1, pooled otherwise."""
    if max_parallel is None or max_parallel <= 1:
        return SequentialExecutor(tasks)
    return AsyncExecutor(tasks, max_parallel=max_parallel)
