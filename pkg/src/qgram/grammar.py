"""q-grammars and their q-derivative operator.

A grammar is a triple of master symbols, one rule template per master and a
letter order. The derivative of a word ``w1...wn`` is the sum over positions
``p`` of ``order(w1...w(p-1) * R(wp) * up(w(p+1)...wn))``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field, replace
from typing import Iterable, Mapping, Sequence

from .errors import NegativeIndex, UnknownMaster
from .freealg import Expr, Letter, _collect, _concat, _reduce_tuple, _shift
from .qpoly import QPoly

__all__ = [
    "Order",
    "IndexExpr",
    "LetterTemplate",
    "RuleTemplate",
    "Grammar",
    "apply_order",
    "rule_apply",
    "derive",
    "derive_n",
    "derive_sequence",
    "is_q_linear",
    "satisfies_shift_condition",
    "reorder_cancellations",
]

log = logging.getLogger(__name__)

_CACHE_LIMIT = 250_000


class Order(str, enum.Enum):
    KSO = "KSO"  # keep sequence order
    LPO = "LPO"  # letter priority: master, then index
    AIO = "AIO"  # ascending interleaving: index, then master
    DIO = "DIO"  # descending interleaving: -index, then master

    def __str__(self) -> str:
        return self.value


def _order_key(order: Order, rank: Mapping[str, int]):
    if order is Order.LPO:
        return lambda l: (rank[l[0]], l[1])
    if order is Order.AIO:
        return lambda l: (l[1], rank[l[0]])
    if order is Order.DIO:
        return lambda l: (-l[1], rank[l[0]])
    return None


@dataclass(frozen=True)
class IndexExpr:
    """Either ``j + offset`` (relative) or the constant ``offset``."""

    offset: int
    relative: bool = True

    def at(self, j: int) -> int:
        return j + self.offset if self.relative else self.offset

    def __str__(self) -> str:
        if not self.relative:
            return str(self.offset)
        if self.offset == 0:
            return "j"
        return f"j{self.offset:+d}"


@dataclass(frozen=True)
class LetterTemplate:
    master: str
    index: IndexExpr
    sign: int = 1

    def at(self, j: int) -> Letter:
        i = self.index.at(j)
        if i < 0:
            raise NegativeIndex(f"{self.master}[{self.index}] is negative at j={j}")
        return Letter(self.master, i, self.sign)


@dataclass(frozen=True)
class RuleTemplate:
    """``s_j -> q^(a*j+b) * c0 * sum(weight * word)``."""

    master: str
    a: int
    b: int
    c0: QPoly
    words: tuple[tuple[QPoly, tuple[LetterTemplate, ...]], ...]

    def instantiate(self, j: int) -> Expr:
        scale = QPoly.q_power(self.a * j + self.b) * self.c0
        terms: dict = {}
        for weight, letters in self.words:
            w = _reduce_tuple(tuple(l.at(j) for l in letters))
            terms.setdefault(w, []).append(scale * weight)
        return Expr._raw(_collect(terms))

    def shift_compatible(self) -> bool:
        return self.a == 1 and all(
            l.index.relative for _, letters in self.words for l in letters
        )


@dataclass(frozen=True)
class Grammar:
    name: str
    masters: tuple[str, ...]
    rules: tuple[RuleTemplate, ...]
    order: Order = Order.KSO
    _state: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "masters", tuple(self.masters))
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "order", Order(self.order))
        if len(set(self.masters)) != len(self.masters):
            raise ValueError(f"duplicate masters in {self.masters}")
        got = [r.master for r in self.rules]
        if sorted(got) != sorted(self.masters):
            raise ValueError(f"rules {got} do not match masters {self.masters}")
        # keep rules aligned with the master order
        by_master = {r.master: r for r in self.rules}
        object.__setattr__(self, "rules", tuple(by_master[m] for m in self.masters))
        for r in self.rules:
            for _, letters in r.words:
                for l in letters:
                    if l.master not in by_master:
                        raise UnknownMaster(
                            f"rule for {r.master} mentions unknown master {l.master!r}"
                        )

    def rule(self, master: str) -> RuleTemplate:
        for r in self.rules:
            if r.master == master:
                return r
        raise UnknownMaster(f"{master!r} is not a master of {self.name}")

    def with_order(self, order: Order | str) -> "Grammar":
        return replace(self, order=Order(order), _state={})

    def renamed(self, name: str) -> "Grammar":
        return replace(self, name=name, _state={})

    # -- caches ---------------------------------------------------------------

    def _cache(self, key: str) -> dict:
        c = self._state.get(key)
        if c is None:
            c = self._state[key] = {}
        return c

    def _sort_key(self):
        if "sort_key" not in self._state:
            rank = {m: i for i, m in enumerate(self.masters)}
            self._state["sort_key"] = _order_key(self.order, rank)
        return self._state["sort_key"]


# -- orders -------------------------------------------------------------------


def _reorder(word: tuple, key) -> tuple:
    if key is None or len(word) < 2:
        return word
    return tuple(sorted(word, key=key))


def apply_order(o: Order | str, a: Expr, masters: Sequence[str] | None = None) -> Expr:
    """Sort each word stably by the order's key and re-reduce.

    Master priority follows ``masters``; by default the alphabetical order of
    the masters occurring in ``a``.
    """
    o = Order(o)
    if masters is None:
        masters = sorted(a.masters())
    rank = {m: i for i, m in enumerate(masters)}
    missing = a.masters() - set(rank)
    if missing:
        raise UnknownMaster(f"no priority given for masters {sorted(missing)}")
    key = _order_key(o, rank)
    acc: dict = {}
    for w, c in a.items():
        acc.setdefault(_reduce_tuple(_reorder(w, key)), []).append(c)
    return Expr._raw(_collect(acc))


# -- rules --------------------------------------------------------------------


def _rule_terms(g: Grammar, l: Letter) -> tuple:
    cache = g._cache("rule")
    hit = cache.get(l)
    if hit is not None:
        return hit
    m, i, s = l
    if m not in g.masters:
        raise UnknownMaster(f"{m!r} is not a master of {g.name}")
    r = g.rule(m).instantiate(i)
    if s < 0:
        inv = (Letter(m, i, -1),)
        nxt = (Letter(m, i + 1, -1),)
        acc: dict = {}
        for w, c in r.items():
            acc.setdefault(_concat(_concat(inv, w), nxt), []).append(-c)
        r = Expr._raw(_collect(acc))
    hit = tuple(r.items())
    cache[l] = hit
    return hit


def rule_apply(g: Grammar, l: Letter | tuple) -> Expr:
    l = l if type(l) is Letter else Letter(*l)
    return Expr._raw(dict(_rule_terms(g, l)))


# -- derivative ---------------------------------------------------------------


def _derive_raw(g: Grammar, w: tuple, reduce_summands: bool = True) -> dict:
    """Map word -> list of coefficient contributions for D(w)."""
    key = g._sort_key()
    acc: dict = {}
    n = len(w)
    for p in range(n):
        left = w[:p]
        right = _shift(w[p + 1:], 1)
        for rw, rc in _rule_terms(g, w[p]):
            if reduce_summands:
                raw = _concat(_concat(left, rw), right)
            else:
                raw = left + rw + right
            ordered = _reorder(raw, key)
            out = _reduce_tuple(ordered)
            if len(out) != len(ordered) and ordered is not raw:
                _flag_reorder_cancellation(g, raw)
            acc.setdefault(out, []).append(rc)
    return acc


def _flag_reorder_cancellation(g: Grammar, raw: tuple) -> None:
    if not _reduce_tuple(raw) == raw:
        # the cancellation was already present before reordering
        return
    count = g._state.get("reorder_cancellations", 0)
    g._state["reorder_cancellations"] = count + 1
    if count == 0:
        log.warning("order %s cancelled letters in a summand of %s", g.order, g.name)


def reorder_cancellations(g: Grammar) -> int:
    """Number of summands so far in which reordering triggered a cancellation."""
    return g._state.get("reorder_cancellations", 0)


def _derive_word(g: Grammar, w: tuple) -> dict:
    cache = g._cache("derive")
    hit = cache.get(w)
    if hit is None:
        hit = _collect(_derive_raw(g, w))
        if len(cache) > _CACHE_LIMIT:
            cache.clear()
        cache[w] = hit
    return hit


def derive(g: Grammar, a: Expr) -> Expr:
    acc: dict = {}
    for w, c in a.items():
        for dw, dc in _derive_word(g, w).items():
            acc.setdefault(dw, []).append(dc if c == 1 else dc * c)
    return Expr._raw(_collect(acc))


def derive_n(g: Grammar, a: Expr, n: int) -> Expr:
    if n < 0:
        raise ValueError("derive_n expects n >= 0")
    for _ in range(n):
        a = derive(g, a)
    return a


def derive_sequence(g: Grammar, letters: Iterable) -> Expr:
    """Apply the derivative formula to a letter sequence without reducing it first.

    ``derive_sequence(g, [x0, x0^-1])`` evaluates the product rule on the
    unreduced pair, which must cancel to zero.
    """
    w = tuple(l if type(l) is Letter else Letter(*l) for l in letters)
    return Expr._raw(_collect(_derive_raw(g, w, reduce_summands=False)))


def iterates(g: Grammar, a: Expr, n: int) -> list[Expr]:
    """``[a, D(a), ..., D^n(a)]``."""
    out = [a]
    for _ in range(n):
        out.append(derive(g, out[-1]))
    return out


def satisfies_shift_condition(g: Grammar) -> bool:
    return all(r.shift_compatible() for r in g.rules)


def is_q_linear(g: Grammar) -> bool:
    return g.order is Order.KSO and satisfies_shift_condition(g)
