"""Exact rational helpers.

``fractions.Fraction`` is the ExactRational carrier everywhere in the
identity layer; this module adds the few operations the rest of the
package needs on top of it: nearest-integer distance, the canonical
``num/den`` text form, and exact integer roots for ``floor(N^theta)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from symlab.errors import DomainError

Rational = Union[int, Fraction]


def as_fraction(value: Rational | str) -> Fraction:
    """Coerce an int, Fraction or ``num/den`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise DomainError(f"Not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den`` (or a bare integer) into a reduced Fraction.

    Raises:
        DomainError: If the text is not an exact rational or den is 0.
    """
    raw = text.strip()
    try:
        if "/" in raw:
            num, den = raw.split("/", 1)
            n, d = int(num.strip()), int(den.strip())
            if d == 0:
                raise DomainError(f"Zero denominator in {text!r}")
            return Fraction(n, d)
        return Fraction(int(raw))
    except ValueError as e:
        if isinstance(e, DomainError):
            raise
        raise DomainError(f"Not an exact rational: {text!r}") from e


def format_rational(value: Rational) -> str:
    """Serialize an exact rational as ``num/den`` (always both parts)."""
    frac = as_fraction(value)
    return f"{frac.numerator}/{frac.denominator}"


def nearest_integer_distance(a: Rational) -> Fraction:
    """Return ``min(frac, 1 - frac)`` with ``frac = a mod 1``; lies in [0, 1/2]."""
    frac = as_fraction(a)
    part = frac - math.floor(frac)
    return min(part, 1 - part)


def integer_root(n: int, k: int) -> int:
    """Return ``floor(n ** (1/k))`` exactly, guarded by t^k <= n < (t+1)^k."""
    if k < 1:
        raise DomainError(f"Root index must be >= 1, got {k}")
    if n < 0:
        raise DomainError(f"Root of a negative integer: {n}")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    t = int(round(n ** (1.0 / k))) if n.bit_length() < 1000 else 1 << (n.bit_length() // k)
    # float seed may be off by a few units in either direction
    while t ** k > n:
        t -= 1
    while (t + 1) ** k <= n:
        t += 1
    return t


def integer_power_floor(base: int, exponent: Rational) -> int:
    """Return ``floor(base ** exponent)`` for a non-negative rational exponent.

    With exponent = a/b this is ``integer_root(base**a, b)``, which is
    reproducible across platforms unlike floating exponentiation.
    """
    if base < 1:
        raise DomainError(f"Base must be >= 1, got {base}")
    exp = as_fraction(exponent)
    if exp < 0:
        raise DomainError(f"Exponent must be non-negative, got {exp}")
    return integer_root(base ** exp.numerator, exp.denominator)
