"""Instrumentation SDK for structured experiment logging."""

from lab_sdk.context import Context, CriticalAssertionError, lab, set_stream

__all__ = ["Context", "CriticalAssertionError", "lab", "set_stream"]
