"""The window character chi_q and its signed residue-class counts.

chi_q(x) counts multiples n of q with |n - x| <= h, each weighted by
sgn(n - x). The dashed variant counts n = x with weight -1 and drops
n = x - h. Writing r = n - x, both are sums of a sign weight w(r) over
r in [-h, h], which is all the rest of the package needs.
"""

from __future__ import annotations

import numpy as np

from symlab.errors import DomainError


def _check(q: int, h: int) -> None:
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")


def sign_weight(r: int, h: int, dashed: bool) -> int:
    """w(r) for |r| <= h: sgn(r), or the dashed weights w(0) = -1, w(-h) = 0."""
    if abs(r) > h:
        return 0
    if dashed:
        if r == 0:
            return -1
        if r == -h:
            return 0
    return (r > 0) - (r < 0)


def chi_window(q: int, h: int, x: int, dashed: bool = False) -> int:
    """Signed count of multiples of q in [x - h, x + h]."""
    _check(q, h)
    if x <= h:
        raise DomainError(f"chi_window() needs x > h, got x={x}, h={h}")
    right = (x + h) // q - x // q
    left = (x - 1) // q - (x - h - 1) // q
    value = right - left
    if dashed:
        value += -(x % q == 0) + ((x - h) % q == 0)
    return value


def residue_class_sums(q: int, h: int, dashed: bool = False) -> np.ndarray:
    """W(a) = sum of w(r) over |r| <= h with r = a (mod q), for a in [0, q).

    chi_q(x) = W(-x mod q), so W carries every exact quantity of the
    window: Parseval reads sum_x chi_q(x)^2 = sum_a W(a)^2.
    """
    _check(q, h)
    a = np.arange(q, dtype=np.int64)
    # r in [1, h] with r = a (mod q)
    positive = (h - a) // q + 1
    positive[0] -= 1
    W = positive - positive[(-a) % q]
    if dashed:
        W[0] -= 1
        W[(-h) % q] += 1
    return W
