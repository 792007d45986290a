"""Finite Fourier expansion of chi_q and its exact power sums.

chi_q(x) = sum_{j mod q} c_{j,q} e_q(jx) with
c_{j,q} = (1/q) sum_{|r|<=h} w(r) e_q(rj). Complex coefficients are
double precision; every power sum is computed from the integer residue
counts W instead, so 0 and 2/q are always told apart.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from symlab.arith.factor import divisors, mobius_value
from symlab.arith.rational import nearest_integer_distance
from symlab.errors import DomainError
from symlab.spectral.window import residue_class_sums


def e_q(m: np.ndarray | int, q: int) -> np.ndarray | complex:
    """exp(2 pi i m / q) with m reduced mod q first."""
    phase = 2 * math.pi * (np.asarray(m) % q) / q
    out = np.cos(phase) + 1j * np.sin(phase)
    return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class WindowSpectrum:
    """All coefficients c_{j,q} (or c'_{j,q}) for one (q, h, dashed)."""

    q: int
    h: int
    dashed: bool
    coefficients: np.ndarray
    power_sum: Fraction

    def evaluate(self, x: int) -> complex:
        """sum_j c_{j,q} e_q(jx)."""
        j = np.arange(self.q)
        return complex(np.sum(self.coefficients * e_q(j * x, self.q)))


@dataclass(frozen=True)
class PowerSumCheck:
    """Exact power sum next to the closed form 2||h/q||."""

    q: int
    h: int
    dashed: bool
    exact: Fraction
    closed_form: Fraction

    @property
    def matches(self) -> bool:
        return self.exact == self.closed_form

    @property
    def gap(self) -> Fraction:
        return self.closed_form - self.exact


@dataclass(frozen=True)
class PrimitivePowerSum:
    """Starred power sum computed directly and through Mobius inversion."""

    ell: int
    h: int
    dashed: bool
    exact: Fraction
    moebius_form: Fraction

    @property
    def matches(self) -> bool:
        return self.exact == self.moebius_form


def window_fourier_coefficient(q: int, h: int, j: int, dashed: bool = False) -> complex:
    """c_{j,q} for 0 <= j < q."""
    if not 0 <= j < q:
        raise DomainError(f"j must lie in [0, {q}), got {j}")
    W = residue_class_sums(q, h, dashed)
    a = np.arange(q, dtype=np.int64)
    return complex(np.sum(W * e_q(a * j, q)) / q)


def window_spectrum(q: int, h: int, dashed: bool = False) -> WindowSpectrum:
    """Every coefficient for one modulus, plus the exact power sum."""
    W = residue_class_sums(q, h, dashed)
    a = np.arange(q, dtype=np.int64)
    phases = np.outer(a, a) % q
    coefficients = (e_q(phases, q) @ W) / q
    if not dashed:
        coefficients[0] = 0
    return WindowSpectrum(
        q=q,
        h=h,
        dashed=dashed,
        coefficients=coefficients,
        power_sum=_power_sum(W),
    )


def _power_sum(W: np.ndarray) -> Fraction:
    return Fraction(int(np.dot(W, W)), len(W))


def coefficient_power_sum(q: int, h: int, dashed: bool = False) -> PowerSumCheck:
    """Return sum_{j<q} |c_{j,q}|^2 exactly, next to 2||h/q||."""
    return PowerSumCheck(
        q=q,
        h=h,
        dashed=dashed,
        exact=_power_sum(residue_class_sums(q, h, dashed)),
        closed_form=2 * nearest_integer_distance(Fraction(h, q)),
    )


def ramanujan_sums(q: int) -> np.ndarray:
    """c_q(m) for every m in [0, q)."""
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    out = np.zeros(q, dtype=np.int64)
    for d in divisors(q):
        mu = mobius_value(q // d)
        if mu:
            out[::d] += d * mu
    return out


def ramanujan_sum(q: int, m: int) -> int:
    """c_q(m) = sum over j coprime to q of e_q(jm)."""
    return int(ramanujan_sums(q)[m % q])


def primitive_power_sum(ell: int, h: int, dashed: bool = False) -> PrimitivePowerSum:
    """Return sum over j coprime to ell of |c_{j,ell}|^2, two independent ways.

    ``exact`` expands |c_j|^2 over pairs of residue classes and sums the
    Ramanujan sums c_ell(a - b); ``moebius_form`` inverts the full power
    sums over divisors, sum_{t|ell} mu(t)/t^2 * P(ell/t).
    """
    if ell < 2:
        raise DomainError(f"primitive_power_sum() needs ell >= 2, got {ell}")
    W = residue_class_sums(ell, h, dashed)
    autocorrelation = np.correlate(np.concatenate([W, W]), W, mode="valid")[:ell]
    total = sum(int(a) * int(c) for a, c in zip(autocorrelation, ramanujan_sums(ell)))
    exact = Fraction(total, ell * ell)
    moebius_form = Fraction(0)
    for t in divisors(ell):
        mu = mobius_value(t)
        if mu:
            moebius_form += Fraction(mu, t * t) * coefficient_power_sum(ell // t, h, dashed).exact
    return PrimitivePowerSum(ell=ell, h=h, dashed=dashed, exact=exact, moebius_form=moebius_form)


def reconstruct_chi(q: int, h: int, x: int, dashed: bool = False) -> complex:
    """Evaluate sum_{l|q, l>1} (l/q) sum*_{j<l} c_{j,l} e_l(jx)."""
    if x <= h:
        raise DomainError(f"reconstruct_chi() needs x > h, got x={x}, h={h}")
    total = 0j
    for ell in divisors(q):
        if ell == 1:
            continue
        spectrum = window_spectrum(ell, h, dashed)
        j = np.arange(ell)
        primitive = np.gcd(j, ell) == 1
        block = np.sum(spectrum.coefficients[primitive] * e_q(j[primitive] * x, ell))
        total += ell / q * block
    return complex(total)
