"""Exit code computation for CLI runs.

    +------------------------------+-----------+
    | outcome                      | exit code |
    +------------------------------+-----------+
    | config violation             | 2         |
    | any failed check or point    | 1         |
    | everything passed            | 0         |
    +------------------------------+-----------+

A config violation short-circuits: nothing was computed, so the check
list is empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2


@dataclass
class ExitCodeSummary:
    """Exit code with the names of the checks that decided it."""

    exit_code: int
    failed_checks: list[str] = field(default_factory=list)
    passed_checks: list[str] = field(default_factory=list)
    config_error: str | None = None


def compute_exit_code(checks: dict[str, bool], config_error: str | None = None) -> ExitCodeSummary:
    """Combine audited checks and a possible config error into an exit code.

    Args:
        checks: Mapping of check name to whether it held. Failed grid
            points appear here as failed checks.
        config_error: Message of the ConfigError raised by validation,
            or ``None``.
    """
    if config_error is not None:
        return ExitCodeSummary(exit_code=EXIT_CONFIG, config_error=config_error)
    failed = [name for name, passed in checks.items() if not passed]
    passed = [name for name, ok in checks.items() if ok]
    return ExitCodeSummary(
        exit_code=EXIT_FAILURE if failed else EXIT_OK,
        failed_checks=failed,
        passed_checks=passed,
    )
