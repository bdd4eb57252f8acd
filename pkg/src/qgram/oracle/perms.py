"""Permutation statistics with zero padding, Roselle bars and the cycle map.

Ascents and descents are read on ``0 p_1 ... p_n 0``, so ``asc + des = n + 1``.
The major index sums the descent positions ``1 <= i < n`` of the unpadded word.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from ..errors import BoundExceeded, NotFullPermutation
from ..freealg import Letter
from ..qpoly import QPoly, qsum

__all__ = [
    "PermStats",
    "perm_stats",
    "right_to_left_minima",
    "roselle_blocks",
    "psi_cycle_map",
    "cycles",
    "eulerian_poly",
    "roselle_poly",
    "roselle_labeling",
    "check_bound",
]

Permutation = Sequence[int]


@dataclass(frozen=True)
class PermStats:
    asc: int
    des: int
    maj: int
    inv: int
    exc: int
    drop: int
    fix: int
    iasc: int
    isol: int
    rlmin: int


def check_bound(n: int, bound: int, what: str) -> None:
    if n < 1 or n > bound:
        raise BoundExceeded(f"{what} is enumerated for 1 <= n <= {bound}, got n={n}")


def right_to_left_minima(p: Permutation) -> list[int]:
    """Positions (0-based) of right-to-left minima."""
    out = []
    low = None
    for i in range(len(p) - 1, -1, -1):
        if low is None or p[i] < low:
            low = p[i]
            out.append(i)
    return out[::-1]


def roselle_blocks(p: Permutation) -> list[tuple[int, ...]]:
    """Split after every right-to-left minimum."""
    blocks = []
    start = 0
    for i in right_to_left_minima(p):
        blocks.append(tuple(p[start : i + 1]))
        start = i + 1
    return blocks


def _isolated(p: Permutation) -> set[int]:
    return {b[0] for b in roselle_blocks(p) if len(b) == 1}


def perm_stats(p: Permutation) -> PermStats:
    p = list(p)
    if len(set(p)) != len(p):
        raise ValueError(f"entries must be distinct: {p}")
    n = len(p)
    s = [0] + p + [0]
    asc = sum(1 for i in range(n + 1) if s[i] < s[i + 1])
    des = n + 1 - asc
    maj = sum(i for i in range(1, n) if p[i - 1] > p[i])
    inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
    exc = sum(1 for i, v in enumerate(p, 1) if v > i)
    drop = sum(1 for i, v in enumerate(p, 1) if v < i)
    fix = n - exc - drop
    iso = _isolated(p)
    isol = len(iso)
    iasc = sum(1 for i in range(n) if s[i] < s[i + 1] and s[i + 1] not in iso)
    rlmin = len(right_to_left_minima(p))
    return PermStats(asc, des, maj, inv, exc, drop, fix, iasc, isol, rlmin)


def cycles(p: Permutation) -> list[list[int]]:
    """Cycles of a permutation of [n], each starting at its minimum."""
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise NotFullPermutation(f"not a permutation of [{n}]: {list(p)}")
    seen = set()
    out = []
    for start in range(1, n + 1):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        v = p[start - 1]
        while v != start:
            cyc.append(v)
            seen.add(v)
            v = p[v - 1]
        out.append(cyc)
    return out


def psi_cycle_map(p: Permutation) -> tuple[int, ...]:
    """Write each cycle ending at its minimum, minima increasing, then erase brackets."""
    word: list[int] = []
    for cyc in cycles(p):
        word.extend(cyc[1:] + cyc[:1])
    return tuple(word)


def eulerian_poly(n: int, variant: str = "inv") -> QPoly:
    """Sum over S_n of q^stat x^asc y^des with stat in {maj, inv}."""
    if variant not in ("maj", "inv"):
        raise ValueError(f"variant must be 'maj' or 'inv', got {variant!r}")
    check_bound(n, 8, "eulerian_poly")
    counts: dict = {}
    for p in permutations(range(1, n + 1)):
        st = perm_stats(p)
        key = (getattr(st, variant), st.asc, st.des)
        counts[key] = counts.get(key, 0) + 1
    return qsum(
        QPoly.monomial(c, {"q": k, "x": a, "y": d}) for (k, a, d), c in counts.items()
    )


def roselle_poly(n: int) -> QPoly:
    """Sum over S_n of q^inv x^iasc z^isol y^(des-1) beta^rlmin."""
    check_bound(n, 7, "roselle_poly")
    counts: dict = {}
    for p in permutations(range(1, n + 1)):
        st = perm_stats(p)
        key = (st.inv, st.iasc, st.isol, st.des - 1, st.rlmin)
        counts[key] = counts.get(key, 0) + 1
    return qsum(
        QPoly.monomial(c, {"q": k, "x": a, "z": i, "y": d, "beta": r})
        for (k, a, i, d, r), c in counts.items()
    )


def roselle_labeling(p: Permutation) -> tuple[Letter, ...]:
    """Labels of the gaps of ``p``, read from right to left.

    The gap before ``p_i`` (1-based ``i``) gets ``y_(n+1-i)`` after a descent,
    ``z_(n+1-i)`` when ``p_i`` is isolated and ``x_(n+1-i)`` otherwise; the final
    gap gets ``e_0``.
    """
    p = list(p)
    n = len(p)
    s = [0] + p
    iso = _isolated(p)
    labels = []
    for i in range(1, n + 1):
        if s[i - 1] > s[i]:
            m = "y"
        elif s[i] in iso:
            m = "z"
        else:
            m = "x"
        labels.append(Letter(m, n + 1 - i))
    labels.append(Letter("e", 0))
    return tuple(reversed(labels))
