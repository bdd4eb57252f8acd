"""Counting sequences: Motzkin, Fibonacci and Euler numbers."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..errors import UnknownName

__all__ = ["motzkin", "fibonacci", "euler", "sequences", "SEQUENCE_NAMES"]

SEQUENCE_NAMES = ("motzkin", "fibonacci", "euler")

# Beyond this size Euler numbers come from the recurrence instead of enumeration.
_ENUMERATION_BOUND = 9


@lru_cache(maxsize=None)
def motzkin(n: int) -> int:
    """M_0 = M_1 = 1, M_n = M_(n-1) + sum_k M_k M_(n-2-k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < 2:
        return 1
    return motzkin(n - 1) + sum(motzkin(k) * motzkin(n - 2 - k) for k in range(n - 1))


def fibonacci(n: int) -> int:
    """F_0 = 0, F_1 = F_2 = 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def _euler_recurrence(n: int) -> int:
    # E_(m+1) = E_m + sum_{k=0}^{m-2} C(m-1, k) E_(k+1) E_(m-k-1), E_0 = E_1 = 1
    if n < 2:
        return 1
    m = n - 1
    return _euler_recurrence(m) + sum(
        comb(m - 1, k) * _euler_recurrence(k + 1) * _euler_recurrence(m - k - 1)
        for k in range(m - 1)
    )


def euler(n: int) -> int:
    """Number of André permutations of [n] (E_0 = 1)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return 1
    if n <= _ENUMERATION_BOUND:
        from .andre import andre_perms

        return len(andre_perms(n, "I"))
    return _euler_recurrence(n)


def sequences(name: str, n: int) -> int:
    if name == "motzkin":
        return motzkin(n)
    if name == "fibonacci":
        return fibonacci(n)
    if name == "euler":
        return euler(n)
    raise UnknownName(f"unknown sequence {name!r}; known: {', '.join(SEQUENCE_NAMES)}")
