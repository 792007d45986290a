"""Mean-value models and the Selberg integral J_f.

The window sum sum_{x<n<=x+h} f(n) is constant on each (m, m+1); the mean
value M(x, h) is sampled at the left endpoint m, so
J = sum_{m=N}^{2N-1} (sum_{n=m+1}^{m+h} f(n) - M(m, h))^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial

from symlab.arith.tables import FunctionTable
from symlab.arith.weights import SieveWeights
from symlab.errors import DomainError, ModelError
from symlab.integrals.symmetry import IntegralReport, check_integral_range

Variant = Literal["sieve_main_term", "window_exact", "fitted_log_polynomial"]
VARIANTS = ("sieve_main_term", "window_exact", "fitted_log_polynomial")
Value = Union[int, Fraction, float]


@dataclass(frozen=True)
class MeanValueModel:
    """How M(x, h) is evaluated.

    ``coefficients`` are the ascending coefficients of P in h * P(log x)
    for the fitted variant; ``k`` pins the expected degree k - 1.
    """

    variant: str
    weights: SieveWeights | None = None
    coefficients: tuple[float, ...] = ()
    k: int | None = None

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise ModelError(f"Unknown model variant {self.variant!r}")
        if self.variant == "sieve_main_term" and self.weights is None:
            raise ModelError("sieve_main_term needs SieveWeights")
        if self.variant == "fitted_log_polynomial":
            if not self.coefficients:
                raise ModelError("fitted_log_polynomial needs coefficients")
            if self.k is not None and self.degree != self.k - 1:
                raise ModelError(f"Fitted degree {self.degree} does not equal k-1 = {self.k - 1}")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def sieve_main_term(cls, weights: SieveWeights) -> MeanValueModel:
        return cls(variant="sieve_main_term", weights=weights)

    @classmethod
    def window_exact(cls) -> MeanValueModel:
        return cls(variant="window_exact")

    @classmethod
    def fitted(cls, coefficients: Sequence[float], k: int | None = None) -> MeanValueModel:
        return cls(variant="fitted_log_polynomial", coefficients=tuple(float(c) for c in coefficients), k=k)

    @property
    def label(self) -> str:
        if self.variant == "sieve_main_term":
            return f"sieve[{self.weights.label}]"
        if self.variant == "fitted_log_polynomial":
            return f"fit[deg={self.degree}]"
        return "window"


def mean_value_eval(
    model: MeanValueModel,
    x: int,
    h: int,
    g: SieveWeights | None = None,
    f: FunctionTable | None = None,
) -> Value:
    """M(x, h) under ``model``.

    sieve_main_term: h * sum_{d <= min(x, Q)} g(d)/d, exact.
    window_exact: (h/x) * sum_{n <= x} f(n), exact.
    fitted_log_polynomial: h * P(log x) in double precision, exact when P
    is constant.
    """
    if x < 1:
        raise DomainError(f"x must be >= 1, got {x}")
    return mean_value_series(model, x, x + 1, h, g=g, f=f)[0]


def mean_value_series(
    model: MeanValueModel,
    start: int,
    stop: int,
    h: int,
    g: SieveWeights | None = None,
    f: FunctionTable | None = None,
) -> list[Value]:
    """M(m, h) for every integer m in [start, stop)."""
    if start < 1:
        raise DomainError(f"Mean values need x >= 1, got {start}")
    xs = range(start, stop)
    if model.variant == "sieve_main_term":
        weights = g if g is not None else model.weights
        if weights is None:
            raise ModelError("sieve_main_term needs SieveWeights")
        harmonic = [Fraction(0)]
        for d in range(1, weights.support + 1):
            harmonic.append(harmonic[-1] + weights(d) / d)
        return [h * harmonic[min(x, weights.support)] for x in xs]
    if model.variant == "window_exact":
        if f is None:
            raise ModelError("window_exact needs the FunctionTable")
        f.require_range(1, stop - 1)
        P = f.prefix_sums
        return [Fraction(h * _int(P[x]), x) for x in xs]
    coefficients = model.coefficients
    if len(coefficients) == 1:
        c = Fraction(coefficients[0])
        return [h * c for _ in xs]
    values = h * Polynomial(coefficients)(np.log(np.arange(start, stop, dtype=np.float64)))
    return values.tolist()


def window_sums(f: FunctionTable, start: int, stop: int, h: int) -> np.ndarray:
    """sum_{n=m+1}^{m+h} f(n) for every m in [start, stop)."""
    f.require_range(1, stop - 1 + h)
    P = f.prefix_sums
    ms = np.arange(start, stop)
    return P[ms + h] - P[ms]


def fit_log_polynomial(f: FunctionTable, N: int, h: int, degree: int) -> MeanValueModel:
    """Least-squares P of ``degree`` with window-sum/h ~ P(log x) over [N, 2N)."""
    if degree < 0:
        raise ModelError(f"degree must be >= 0, got {degree}")
    check_integral_range(f, N, h)
    ys = window_sums(f, N, 2 * N, h).astype(np.float64) / h
    xs = np.log(np.arange(N, 2 * N, dtype=np.float64))
    if N <= degree:
        raise ModelError(f"Need more than {degree} points to fit, got {N}")
    coef = Polynomial.fit(xs, ys, degree).convert().coef
    padded = np.zeros(degree + 1)
    padded[: len(coef)] = coef
    return MeanValueModel.fitted(padded.tolist(), k=degree + 1)


def squared_residual_sum(residuals: Sequence[Value]) -> Value:
    """sum r^2, exact for ints / Fractions and fsum-accurate for floats."""
    if any(isinstance(r, float) for r in residuals):
        return math.fsum(float(r) * float(r) for r in residuals)
    dens = [r.denominator for r in residuals if isinstance(r, Fraction) and r.denominator != 1]
    if not dens:
        return sum(int(r) * int(r) for r in residuals)
    # one common denominator avoids a gcd per addition
    common = math.lcm(*set(dens))
    total = 0
    for r in residuals:
        r = Fraction(r)
        scaled = r.numerator * (common // r.denominator)
        total += scaled * scaled
    return Fraction(total, common * common)


def selberg_residuals(
    f: FunctionTable, start: int, stop: int, h: int, model: MeanValueModel
) -> list[Value]:
    """window sum minus M at every m in [start, stop)."""
    sums = window_sums(f, start, stop, h).tolist()
    means = mean_value_series(model, start, stop, h, f=f)
    return [s - m for s, m in zip(sums, means)]


def selberg_integral(f: FunctionTable, N: int, h: int, model: MeanValueModel) -> IntegralReport:
    """J_f(N, h) under ``model``."""
    check_integral_range(f, N, h)
    value = squared_residual_sum(selberg_residuals(f, N, 2 * N, h, model))
    return IntegralReport(
        kind="selberg",
        value=value,
        mode="continuous",
        N=N,
        h=h,
        f_label=f.label,
        terms={"model": model.label},
    )


def _int(v: object) -> int:
    return int(v) if isinstance(v, np.integer) else v  # type: ignore[return-value]
