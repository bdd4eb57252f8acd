"""Exact commutative Laurent polynomials with integer coefficients.

A :class:`QPoly` is a finite map from monomials to nonzero integers. A
monomial is stored as a tuple of ``(name, exponent)`` pairs, sorted by the
rank of the name in the configured alphabet, with no zero exponents.

>>> q = QPoly.var("q")
>>> print((1 + q) * (1 - q))
1-q^2
>>> print(QPoly.parse("(1+q)*x^-1*y"))
x^-1*y+q*x^-1*y
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

from ._lex import TokenStream
from .errors import (
    GrammarSyntaxError,
    NegativePowerOfNonMonomial,
    NotInvertible,
    UnknownIndeterminate,
)

__all__ = [
    "QPoly",
    "Monomial",
    "alphabet",
    "extend_alphabet",
    "add",
    "mul",
    "neg",
    "pow",
    "invert_monomial",
]

Monomial = tuple  # tuple[tuple[str, int], ...]

_ALPHABET: list[str] = ["q", "x", "y", "z", "e", "beta", "t"]
_RANK: dict[str, int] = {name: i for i, name in enumerate(_ALPHABET)}


def alphabet() -> tuple[str, ...]:
    return tuple(_ALPHABET)


def extend_alphabet(*names: str) -> None:
    """Append indeterminate names to the commutative alphabet."""
    for name in names:
        if not name.isidentifier():
            raise ValueError(f"not a valid indeterminate name: {name!r}")
        if name not in _RANK:
            _RANK[name] = len(_ALPHABET)
            _ALPHABET.append(name)


def _check_name(name: str) -> None:
    if name not in _RANK:
        raise UnknownIndeterminate(f"{name!r} is not in the alphabet {tuple(_ALPHABET)}")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    # merge two rank-sorted tuples
    out = []
    i = j = 0
    rank = _RANK
    while i < len(a) and j < len(b):
        na, ea = a[i]
        nb, eb = b[j]
        if na == nb:
            if ea + eb:
                out.append((na, ea + eb))
            i += 1
            j += 1
        elif rank[na] < rank[nb]:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def _mono_from_map(exps: Mapping[str, int]) -> Monomial:
    for name in exps:
        _check_name(name)
    return tuple(
        sorted(((n, int(e)) for n, e in exps.items() if e), key=lambda kv: _RANK[kv[0]])
    )


def _display_key(mono: Monomial):
    return (sum(e for _, e in mono), tuple((_RANK[n], -e) for n, e in mono))


Scalar = Union[int, "QPoly"]


class QPoly:
    """Immutable Laurent polynomial over the integers."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, value: Scalar | Mapping | None = None):
        if value is None:
            self._terms = {}
        elif isinstance(value, QPoly):
            self._terms = value._terms
        elif isinstance(value, int):
            self._terms = {(): value} if value else {}
        else:
            terms: dict = {}
            for mono, c in value.items():
                if isinstance(mono, Mapping):
                    mono = _mono_from_map(mono)
                if c:
                    terms[mono] = terms.get(mono, 0) + int(c)
            self._terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "QPoly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls(c)

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "QPoly":
        _check_name(name)
        return cls._raw({((name, exp),) if exp else (): 1})

    @classmethod
    def monomial(cls, coeff: int = 1, exponents: Mapping[str, int] | None = None) -> "QPoly":
        if not coeff:
            return cls()
        return cls._raw({_mono_from_map(exponents or {}): coeff})

    @classmethod
    def q_power(cls, k: int) -> "QPoly":
        return cls._raw({(("q", k),) if k else (): 1})

    # -- inspection ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit_monomial(self) -> bool:
        return len(self._terms) == 1 and next(iter(self._terms.values())) in (1, -1)

    def terms(self) -> Iterator[tuple[dict[str, int], int]]:
        """Yield ``(exponents, coeff)`` pairs in canonical display order."""
        for mono in sorted(self._terms, key=_display_key):
            yield dict(mono), self._terms[mono]

    def raw_items(self):
        """Unordered ``(monomial, coeff)`` pairs with monomials as name/exponent tuples."""
        return self._terms.items()

    def coefficient(self, exponents: Mapping[str, int] | None = None) -> int:
        return self._terms.get(_mono_from_map(exponents or {}), 0)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` appearing in any term."""
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(dict(m).get(name, 0) for m in self._terms)

    def variables(self) -> set[str]:
        return {n for m in self._terms for n, _ in m}

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            other = QPoly(other)
        elif not isinstance(other, QPoly):
            return NotImplemented
        if len(self._terms) < len(other._terms):
            a, b = other._terms, self._terms
        else:
            a, b = self._terms, other._terms
        out = dict(a)
        for m, c in b.items():
            c2 = out.get(m, 0) + c
            if c2:
                out[m] = c2
            else:
                del out[m]
        return QPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QPoly":
        return QPoly._raw({m: -c for m, c in self._terms.items()})

    def __pos__(self) -> "QPoly":
        return self

    def __sub__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            other = QPoly(other)
        elif not isinstance(other, QPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QPoly":
        return (-self) + other

    def __mul__(self, other: Scalar) -> "QPoly":
        if isinstance(other, int):
            if not other:
                return QPoly()
            return QPoly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, QPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                c = out.get(m, 0) + c1 * c2
                if c:
                    out[m] = c
                else:
                    del out[m]
        return QPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise NegativePowerOfNonMonomial(
                    f"cannot raise {self} to the negative power {k}"
                )
            return self.invert_monomial_or_raise(NegativePowerOfNonMonomial) ** (-k)
        if len(self._terms) == 1:
            (mono, c), = self._terms.items()
            return QPoly._raw({tuple((n, e * k) for n, e in mono) if k else (): c**k})
        result = QPoly(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def invert_monomial_or_raise(self, exc_type=NotInvertible) -> "QPoly":
        if len(self._terms) != 1:
            raise exc_type(f"{self} is not a monomial")
        (mono, c), = self._terms.items()
        if c not in (1, -1):
            raise exc_type(f"{self} has non-unit coefficient {c}")
        return QPoly._raw({tuple((n, -e) for n, e in mono): c})

    def invert_monomial(self) -> "QPoly":
        return self.invert_monomial_or_raise(NotInvertible)

    def subs(self, values: Mapping[str, Scalar]) -> "QPoly":
        """Substitute integers or polynomials for some indeterminates."""
        out = QPoly()
        cache: dict = {}
        for mono, c in self._terms.items():
            term = QPoly(c)
            rest = []
            for name, e in mono:
                if name in values:
                    key = (name, e)
                    if key not in cache:
                        v = values[name]
                        v = v if isinstance(v, QPoly) else QPoly(int(v))
                        cache[key] = v**e
                    term = term * cache[key]
                else:
                    rest.append((name, e))
            if rest:
                term = term * QPoly._raw({tuple(rest): 1})
            out = out + term
        return out

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly(other)
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"QPoly({self.to_text()!r})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono in sorted(self._terms, key=_display_key):
            c = self._terms[mono]
            factors = [n if e == 1 else f"{n}^{e}" for n, e in mono]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def needs_parens(self) -> bool:
        """True when the text form must be parenthesized as a factor."""
        return len(self._terms) > 1

    @classmethod
    def parse(cls, text: str) -> "QPoly":
        ts = TokenStream(text)
        try:
            p = parse_sum(ts)
        except UnknownIndeterminate as exc:
            raise GrammarSyntaxError(str(exc), ts.peek().line, ts.peek().column) from exc
        if ts.peek().kind != "end":
            ts.fail(f"unexpected {ts.peek().text!r}")
        return p


def parse_sum(ts: TokenStream) -> QPoly:
    sign = -1 if ts.accept("-") else 1
    if sign == 1:
        ts.accept("+")
    total = parse_product(ts) * sign
    while ts.at("+") or ts.at("-"):
        sign = 1 if ts.next().text == "+" else -1
        total = total + parse_product(ts) * sign
    return total


def parse_product(ts: TokenStream) -> QPoly:
    p = _parse_power(ts)
    while ts.accept("*"):
        p = p * _parse_power(ts)
    return p


def _parse_power(ts: TokenStream) -> QPoly:
    base = _parse_atom(ts)
    if ts.accept("^"):
        if ts.accept("("):
            k = ts.signed_int()
            ts.expect(")")
        else:
            k = ts.signed_int()
        return base**k
    return base


def _parse_atom(ts: TokenStream) -> QPoly:
    tok = ts.peek()
    if tok.kind == "int":
        ts.next()
        return QPoly(int(tok.text))
    if tok.kind == "name":
        ts.next()
        return QPoly.var(tok.text)
    if ts.accept("("):
        p = parse_sum(ts)
        ts.expect(")")
        return p
    ts.fail(f"unexpected {tok.text or 'end of input'!r}", tok)


def add(p: QPoly, r: QPoly) -> QPoly:
    return p + r


def mul(p: QPoly, r: QPoly) -> QPoly:
    return p * r


def neg(p: QPoly) -> QPoly:
    return -p


def pow(p: QPoly, k: int) -> QPoly:  # noqa: A001 - mirrors the operation name
    return p**k


def invert_monomial(p: QPoly) -> QPoly:
    return p.invert_monomial()


def qsum(polys: Iterable[QPoly]) -> QPoly:
    """Sum many polynomials with a single accumulator dict."""
    out: dict = {}
    for p in polys:
        for m, c in p._terms.items():
            c2 = out.get(m, 0) + c
            if c2:
                out[m] = c2
            else:
                del out[m]
    return QPoly._raw(out)
