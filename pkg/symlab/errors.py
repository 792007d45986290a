"""Exception hierarchy shared by every symlab sub-package.

Operations validate their preconditions up front and raise one of these;
nothing is clamped silently. The CLI maps ``ConfigError`` and
``MalformedFileError`` to exit code 2 and every other ``SymlabError`` to
exit code 1.
"""

from __future__ import annotations


class SymlabError(Exception):
    """Base class for all symlab failures."""


class DomainError(SymlabError, ValueError):
    """An argument lies outside the operation's domain."""


class TableRangeError(DomainError):
    """A window or integration range falls outside a FunctionTable."""


class ArithmeticOverflowError(SymlabError, OverflowError):
    """A 64-bit table would overflow and wide failover is disabled."""


class WeightsError(DomainError):
    """A SieveWeights invariant or support requirement is violated."""


class MalformedFileError(DomainError):
    """An input CSV has the wrong header or an unparsable cell."""


class ModelError(DomainError):
    """A MeanValueModel is inconsistent with its inputs."""


class HypothesisViolation(SymlabError):
    """Theorem or Corollary hypotheses do not hold for the given inputs."""

    def __init__(self, violations: list[str]) -> None:
        self.violations = list(violations)
        super().__init__("Hypotheses violated: " + "; ".join(self.violations))


class ConfigError(SymlabError):
    """A ScanConfig violates one of its constraints.

    The first violated inequality is available as ``inequality``.
    """

    def __init__(self, violations: list[str]) -> None:
        self.violations = list(violations)
        self.inequality = self.violations[0] if self.violations else ""
        super().__init__("Config violates " + ", ".join(self.violations))


class ReportError(SymlabError):
    """A report cannot be read or rendered."""
