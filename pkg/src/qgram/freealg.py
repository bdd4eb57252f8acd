"""Reduced words in indexed letters and their QPoly-linear combinations.

A letter ``x[3]^-1`` is the triple ``Letter("x", 3, -1)``. Words are tuples of
letters kept freely reduced; an :class:`Expr` maps words to nonzero
:class:`~qgram.qpoly.QPoly` coefficients.

>>> e = Expr.parse("y[2]^-1*x[0]*x[0]*y[1]")
>>> print(up_arrow(e, 1))
y[3]^-1*x[1]^2*y[2]
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence, Union

from ._lex import TokenStream
from .errors import GrammarSyntaxError, NotInvertible, UnknownIndeterminate
from .qpoly import QPoly, qsum

__all__ = [
    "Letter",
    "Word",
    "Expr",
    "reduce",
    "word_inverse",
    "expr_add",
    "expr_mul",
    "expr_scale",
    "up_arrow",
    "omega",
    "word_key",
    "format_word",
]


class Letter(NamedTuple):
    master: str
    index: int
    sign: int = 1

    def inverse(self) -> "Letter":
        return Letter(self.master, self.index, -self.sign)

    def __str__(self) -> str:
        return f"{self.master}[{self.index}]" + ("^-1" if self.sign < 0 else "")


def _cancels(a, b) -> bool:
    return a[0] == b[0] and a[1] == b[1] and a[2] == -b[2]


def reduce(raw: Iterable) -> "Word":
    """Freely reduce a letter sequence."""
    out: list = []
    for l in raw:
        if out and _cancels(out[-1], l):
            out.pop()
        else:
            out.append(l if type(l) is Letter else Letter(*l))
    return Word._trusted(out)


def _reduce_tuple(raw: Sequence) -> tuple:
    out: list = []
    for l in raw:
        if out and _cancels(out[-1], l):
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _concat(a: tuple, b: tuple) -> tuple:
    # both reduced: cancellation can only happen at the junction
    i, j = len(a), 0
    nb = len(b)
    while i and j < nb and _cancels(a[i - 1], b[j]):
        i -= 1
        j += 1
    if i == len(a) and j == 0:
        return a + b
    return a[:i] + b[j:]


def _shift(w: tuple, k: int) -> tuple:
    return tuple(Letter(m, i + k, s) for m, i, s in w)


def word_key(w: Sequence):
    """Canonical sort key: length, then letters lexicographically."""
    return (len(w), tuple(w))


def format_word(w: Sequence) -> str:
    if not w:
        return "1"
    parts = []
    n = len(w)
    i = 0
    while i < n:
        l = w[i]
        j = i + 1
        while j < n and w[j] == l:
            j += 1
        e = (j - i) * l[2]
        parts.append(f"{l[0]}[{l[1]}]" + ("" if e == 1 else f"^{e}"))
        i = j
    return "*".join(parts)


class Word(tuple):
    """A freely reduced tuple of letters; the empty word is the identity."""

    __slots__ = ()

    def __new__(cls, letters: Iterable = ()):
        return reduce(letters)

    @classmethod
    def _trusted(cls, letters) -> "Word":
        return tuple.__new__(cls, letters)

    def inverse(self) -> "Word":
        return word_inverse(self)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r})"


def word_inverse(w: Sequence) -> Word:
    return Word._trusted(Letter(m, i, -s) for m, i, s in reversed(w))


Coeff = Union[int, QPoly]


def _as_qpoly(c: Coeff) -> QPoly:
    return c if isinstance(c, QPoly) else QPoly(c)


class Expr:
    """Finite QPoly-linear combination of reduced words."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        acc: dict = {}
        if terms:
            for w, c in terms.items():
                c = _as_qpoly(c)
                if not c:
                    continue
                w = _reduce_tuple(tuple(l if type(l) is Letter else Letter(*l) for l in w))
                prev = acc.get(w)
                acc[w] = c if prev is None else prev + c
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict) -> "Expr":
        e = cls.__new__(cls)
        e._terms = terms
        return e

    @classmethod
    def zero(cls) -> "Expr":
        return cls._raw({})

    @classmethod
    def const(cls, c: Coeff) -> "Expr":
        c = _as_qpoly(c)
        return cls._raw({(): c} if c else {})

    @classmethod
    def letter(cls, master: str, index: int, sign: int = 1) -> "Expr":
        return cls._raw({(Letter(master, index, sign),): QPoly(1)})

    @classmethod
    def word(cls, letters: Iterable, coeff: Coeff = 1) -> "Expr":
        c = _as_qpoly(coeff)
        return cls._raw({tuple(reduce(letters)): c} if c else {})

    # -- inspection ---------------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def omega(self) -> int:
        return len(self._terms)

    def coefficient(self, word: Iterable) -> QPoly:
        return self._terms.get(tuple(reduce(word)), QPoly())

    def words(self) -> list[Word]:
        return [Word._trusted(w) for w in sorted(self._terms, key=word_key)]

    def terms(self) -> Iterator[tuple[Word, QPoly]]:
        """Yield ``(word, coeff)`` pairs in canonical order."""
        for w in sorted(self._terms, key=word_key):
            yield Word._trusted(w), self._terms[w]

    def items(self):
        """Unordered view of the underlying ``word -> coeff`` map."""
        return self._terms.items()

    def masters(self) -> set[str]:
        return {l[0] for w in self._terms for l in w}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "Expr | Coeff") -> "Expr":
        if not isinstance(other, Expr):
            if isinstance(other, (int, QPoly)):
                other = Expr.const(other)
            else:
                return NotImplemented
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for w, c in b.items():
            prev = out.get(w)
            if prev is None:
                out[w] = c
            else:
                s = prev + c
                if s:
                    out[w] = s
                else:
                    del out[w]
        return Expr._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Expr":
        return Expr._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "Expr | Coeff") -> "Expr":
        if not isinstance(other, Expr):
            if isinstance(other, (int, QPoly)):
                other = Expr.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coeff) -> "Expr":
        return (-self) + other

    def scale(self, c: Coeff) -> "Expr":
        c = _as_qpoly(c)
        if not c:
            return Expr.zero()
        if c == 1:
            return self
        out = {}
        for w, a in self._terms.items():
            p = a * c
            if p:
                out[w] = p
        return Expr._raw(out)

    def __mul__(self, other: "Expr | Coeff") -> "Expr":
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        if not isinstance(other, Expr):
            return NotImplemented
        acc: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = _concat(w1, w2)
                acc.setdefault(w, []).append(c1 * c2)
        return Expr._raw(_collect(acc))

    def __rmul__(self, other: Coeff) -> "Expr":
        if isinstance(other, (int, QPoly)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "Expr":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise NotInvertible(f"cannot invert the sum {self}")
            (w, c), = self._terms.items()
            inv = Expr._raw({tuple(word_inverse(w)): c.invert_monomial()})
            return inv ** (-k)
        result = Expr.const(1)
        for _ in range(k):
            result = result * self
        return result

    def up(self, k: int = 1) -> "Expr":
        if k == 0:
            return self
        return Expr._raw({_shift(w, k): c for w, c in self._terms.items()})

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QPoly)):
            other = Expr.const(other)
        if not isinstance(other, Expr):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Expr({self.to_text()!r})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for n, (w, c) in enumerate(self.terms()):
            term = _format_term(w, c)
            if n == 0:
                out = term
            elif term.startswith("-"):
                out += " - " + term[1:]
            else:
                out += " + " + term
        return out

    @classmethod
    def parse(cls, text: str) -> "Expr":
        ts = TokenStream(text)
        e = parse_expr_sum(ts)
        if ts.peek().kind != "end":
            ts.fail(f"unexpected {ts.peek().text!r}")
        return e


def _collect(acc: dict) -> dict:
    out = {}
    for w, cs in acc.items():
        c = cs[0] if len(cs) == 1 else qsum(cs)
        if c:
            out[w] = c
    return out


def _format_term(w: Sequence, c: QPoly) -> str:
    if not w:
        return c.to_text()
    ws = format_word(w)
    if c == 1:
        return ws
    if c == -1:
        return "-" + ws
    if c.is_monomial():
        return f"{c.to_text()}*{ws}"
    return f"({c.to_text()})*{ws}"


# -- expression text parser ---------------------------------------------------


def parse_expr_sum(ts: TokenStream) -> Expr:
    sign = -1 if ts.accept("-") else 1
    if sign == 1:
        ts.accept("+")
    total = _parse_expr_product(ts).scale(sign)
    while ts.at("+") or ts.at("-"):
        sign = 1 if ts.next().text == "+" else -1
        total = total + _parse_expr_product(ts).scale(sign)
    return total


def _parse_expr_product(ts: TokenStream) -> Expr:
    e = _parse_expr_power(ts)
    while ts.accept("*"):
        e = e * _parse_expr_power(ts)
    return e


def _parse_expr_power(ts: TokenStream) -> Expr:
    tok = ts.peek()
    base = _parse_expr_atom(ts)
    if ts.accept("^"):
        if ts.accept("("):
            k = ts.signed_int()
            ts.expect(")")
        else:
            k = ts.signed_int()
        try:
            return base**k
        except NotInvertible as exc:
            raise GrammarSyntaxError(str(exc), tok.line, tok.column) from exc
    return base


def _parse_expr_atom(ts: TokenStream) -> Expr:
    tok = ts.peek()
    if tok.kind == "int":
        ts.next()
        return Expr.const(int(tok.text))
    if tok.kind == "name":
        ts.next()
        if ts.accept("["):
            index = int(ts.expect_kind("int", "a non-negative index").text)
            ts.expect("]")
            return Expr.letter(tok.text, index)
        try:
            return Expr.const(QPoly.var(tok.text))
        except UnknownIndeterminate as exc:
            raise GrammarSyntaxError(str(exc), tok.line, tok.column) from exc
    if ts.accept("("):
        e = parse_expr_sum(ts)
        ts.expect(")")
        return e
    ts.fail(f"unexpected {tok.text or 'end of input'!r}", tok)


# -- functional interface -----------------------------------------------------


def expr_add(a: Expr, b: Expr) -> Expr:
    return a + b


def expr_mul(a: Expr, b: Expr) -> Expr:
    return a * b


def expr_scale(c: Coeff, a: Expr) -> Expr:
    return a.scale(c)


def up_arrow(a: Expr, k: int = 1) -> Expr:
    if k < 1:
        raise ValueError("up_arrow expects a positive shift")
    return a.up(k)


def omega(a: Expr) -> int:
    return a.omega()
