"""André permutations, increasing binary trees and the bijection between them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Optional, Sequence

from ..qpoly import QPoly, qsum
from .perms import check_bound, perm_stats

__all__ = [
    "andre_perms",
    "is_andre_perm",
    "andre_perm_poly",
    "BinaryTree",
    "psi_tree",
    "tree_word",
    "tree_inv",
    "tree_leaf_deg1",
    "increasing_trees",
    "is_andre_tree",
    "andre_trees",
    "andre_tree_poly",
]


def _kind(kind: str) -> str:
    k = str(kind).upper()
    if k not in ("I", "II"):
        raise ValueError(f"kind must be 'I' or 'II', got {kind!r}")
    return k


def _flank_ok(flanks: Sequence[int], right: Sequence[int], kind: str) -> bool:
    if not flanks:
        return True
    target = max(flanks) if kind == "I" else min(flanks)
    return target in right


def is_andre_perm(word: Sequence[int], kind: str = "I") -> bool:
    """Check the recursive definition directly on a word of distinct letters."""
    kind = _kind(kind)
    if len(word) <= 1:
        return True
    i = word.index(min(word))
    left, right = word[:i], word[i + 1:]
    return (
        _flank_ok(tuple(left) + tuple(right), right, kind)
        and is_andre_perm(left, kind)
        and is_andre_perm(right, kind)
    )


@lru_cache(maxsize=None)
def _compose(labels: tuple[int, ...], kind: str) -> tuple[tuple[int, ...], ...]:
    if len(labels) <= 1:
        return (labels,)
    m, rest = labels[0], labels[1:]
    out = []
    for r in range(len(rest)):
        for left in combinations(rest, r):
            lset = set(left)
            right = tuple(v for v in rest if v not in lset)
            if not _flank_ok(rest, right, kind):
                continue
            for a in _compose(left, kind):
                for b in _compose(right, kind):
                    out.append(a + (m,) + b)
    return tuple(sorted(out))


def andre_perms(n: int, kind: str = "I") -> list[tuple[int, ...]]:
    """All André permutations of [n], built by splitting at the minimum letter."""
    check_bound(n, 9, "andre_perms")
    return list(_compose(tuple(range(1, n + 1)), _kind(kind)))


def andre_perm_poly(n: int, kind: str = "I") -> QPoly:
    """Sum of t^des q^inv, with des counted on the zero-padded word."""
    counts: dict = {}
    for p in andre_perms(n, kind):
        st = perm_stats(p)
        counts[(st.des, st.inv)] = counts.get((st.des, st.inv), 0) + 1
    return qsum(QPoly.monomial(c, {"t": d, "q": i}) for (d, i), c in counts.items())


@dataclass(frozen=True)
class BinaryTree:
    label: int
    left: Optional["BinaryTree"] = None
    right: Optional["BinaryTree"] = None

    def nodes(self) -> Iterator["BinaryTree"]:
        yield self
        if self.left:
            yield from self.left.nodes()
        if self.right:
            yield from self.right.nodes()

    def labels(self) -> list[int]:
        return [t.label for t in self.nodes()]

    def __str__(self) -> str:
        if not self.left and not self.right:
            return str(self.label)
        l = str(self.left) if self.left else "."
        r = str(self.right) if self.right else "."
        return f"{self.label}({l}, {r})"


def psi_tree(p: Sequence[int]) -> Optional[BinaryTree]:
    """Root at the least letter, left subtree from the prefix, right from the suffix."""
    if not p:
        return None
    i = min(range(len(p)), key=p.__getitem__)
    return BinaryTree(p[i], psi_tree(p[:i]), psi_tree(p[i + 1:]))


def tree_word(t: Optional[BinaryTree]) -> tuple[int, ...]:
    """In-order reading; inverse of :func:`psi_tree`."""
    if t is None:
        return ()
    return tree_word(t.left) + (t.label,) + tree_word(t.right)


def tree_inv(t: Optional[BinaryTree]) -> int:
    """Count pairs (i, j), i > j, with j right of the root-to-i path, or on it with its left child on it."""
    if t is None:
        return 0
    total = 0

    def walk(node: BinaryTree, turns: list[BinaryTree]):
        nonlocal total
        i = node.label
        for p in turns:
            total += 1  # p itself: its left child is on the path
            if p.right:
                total += sum(1 for v in p.right.labels() if v < i)
        if node.left:
            walk(node.left, turns + [node])
        if node.right:
            walk(node.right, turns)

    walk(t, [])
    return total


def tree_leaf_deg1(t: Optional[BinaryTree]) -> tuple[int, int]:
    """(number of leaves, number of vertices with exactly one child)."""
    if t is None:
        return (0, 0)
    leaves = deg1 = 0
    for node in t.nodes():
        kids = (node.left is not None) + (node.right is not None)
        leaves += kids == 0
        deg1 += kids == 1
    return leaves, deg1


def increasing_trees(labels: Sequence[int]) -> Iterator[Optional[BinaryTree]]:
    """Every increasing binary tree on the given label set."""
    labels = tuple(sorted(labels))
    if not labels:
        yield None
        return
    m, rest = labels[0], labels[1:]
    for r in range(len(rest) + 1):
        for left in combinations(rest, r):
            lset = set(left)
            right = tuple(v for v in rest if v not in lset)
            for lt in increasing_trees(left):
                for rt in increasing_trees(right):
                    yield BinaryTree(m, lt, rt)


def is_andre_tree(t: Optional[BinaryTree], kind: str = "I") -> bool:
    """Sibling maxima increase (I, empty max 0) or sibling minima decrease (II, empty min inf)."""
    kind = _kind(kind)
    if t is None:
        return True
    for node in t.nodes():
        if node.left is None and node.right is None:
            continue
        if kind == "I":
            lmax = max(node.left.labels()) if node.left else 0
            rmax = max(node.right.labels()) if node.right else 0
            if not lmax < rmax:
                return False
        else:
            inf = float("inf")
            lmin = min(node.left.labels()) if node.left else inf
            rmin = min(node.right.labels()) if node.right else inf
            if not lmin > rmin:
                return False
    return True


def andre_trees(n: int, kind: str = "I") -> list[BinaryTree]:
    check_bound(n, 8, "andre_trees")
    return [t for t in increasing_trees(range(1, n + 1)) if is_andre_tree(t, kind)]


def andre_tree_poly(n: int, kind: str = "I") -> QPoly:
    """Sum of x^l(T) y^u(T) q^inv(T) over André trees on [n]."""
    counts: dict = {}
    for t in andre_trees(n, kind):
        l, u = tree_leaf_deg1(t)
        key = (l, u, tree_inv(t))
        counts[key] = counts.get(key, 0) + 1
    return qsum(QPoly.monomial(c, {"x": l, "y": u, "q": i}) for (l, u, i), c in counts.items())
