"""Structured experiment instrumentation SDK.

Provides context managers and helpers for emitting structured [LAB] log
events with blocks, steps, measurements, assertions, and error handling.
Events go to stderr unless another stream is installed with
``set_stream``, so report output on stdout stays untouched.
"""

import json
import os
import sys
import traceback
from contextlib import contextmanager
from typing import Any, Generator, TextIO

_stream: TextIO | None = None


def set_stream(stream: TextIO | None) -> None:
    """Route [LAB] events to ``stream``; ``None`` restores stderr."""
    global _stream
    _stream = stream


def lab(event: dict[str, Any]) -> None:
    """Emit a structured log event with source location."""
    frame = sys._getframe(1)
    rel = os.path.relpath(frame.f_code.co_filename)
    event = {**event, "_file": rel, "_line": frame.f_lineno}
    out = _stream if _stream is not None else sys.stderr
    print(f"[LAB] {json.dumps(event, default=str, ensure_ascii=False)}", file=out)


class CriticalAssertionError(Exception):
    def __init__(self, message: str, logged: bool = False) -> None:
        super().__init__(message)
        self.logged: bool = logged


class Context:
    def __init__(self) -> None:
        self.failures: list[str] = []
        self._sealed: bool = False

    def _check_sealed(self) -> None:
        if self._sealed:
            raise RuntimeError(
                "Cannot report to a sealed context, use the active child context instead"
            )

    @contextmanager
    def _scope(self, kind: str, name: str, extra: dict[str, Any]) -> Generator["Context", None, None]:
        self._sealed = True
        child = Context()
        lab({"type": f"{kind}_start", kind: name, **extra})
        try:
            yield child
        except Exception as e:
            if isinstance(e, CriticalAssertionError) and e.logged:
                raise
            child.error(type(e).__name__, str(e), traceback=traceback.format_exc())
        finally:
            lab({"type": f"{kind}_end", kind: name})
            self.failures.extend(child.failures)
            self._sealed = False

    def block(self, block_type: str, **extra: Any):
        return self._scope("block", block_type, extra)

    def step(self, step_name: str, **extra: Any):
        return self._scope("step", step_name, extra)

    def measure(self, name: str, value: Any, unit: str, **extra: Any) -> None:
        self._check_sealed()
        lab({"type": "measurement", "name": name, "value": value, "unit": unit, **extra})

    def error(self, name: str, message: str, **extra: Any) -> None:
        lab({"type": "error", "name": name, "message": message, **extra})
        self.failures.append(name)
        raise CriticalAssertionError(f"Error: {name}: {message}", logged=True)

    def assert_that(self, name: str, passed: bool, critical: bool = False, **extra: Any) -> None:
        self._check_sealed()
        lab({"type": "result", "name": name, "passed": bool(passed), **extra})
        if not passed:
            self.failures.append(name)
            if critical:
                raise CriticalAssertionError(f"Critical assertion failed: {name}", logged=True)

    def exit_code(self) -> int:
        return 1 if self.failures else 0

