"""Gaussian binomials and truncated Eulerian series.

An :class:`ESeries` of order ``N`` holds ``a_0..a_N`` and stands for
``sum a_n u^n / (q;q)_n``. In this basis the product of two series is the
q-binomial convolution, and the q-derivative in ``u`` is a left shift, so all
arithmetic stays inside integer Laurent polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

from .errors import EmptyOrder, NonUnitConstantTerm, OrderMismatch, UnknownName
from .evalmap import EvalMap, evaluate
from .freealg import Expr
from .grammar import Grammar, derive
from .qpoly import QPoly, qsum

__all__ = [
    "qbinom",
    "qpoch",
    "qint",
    "ESeries",
    "series_add",
    "series_sub",
    "series_mul",
    "series_scale",
    "series_div",
    "series_subst_q",
    "series_dq",
    "series_mul_u",
    "std_series",
    "STD_SERIES",
    "gen",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 8


@lru_cache(maxsize=None)
def qbinom(n: int, k: int) -> QPoly:
    """Gaussian binomial ``[n choose k]_q``; zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return QPoly()
    if k == 0 or k == n:
        return QPoly(1)
    return qbinom(n - 1, k - 1) + QPoly.q_power(k) * qbinom(n - 1, k)


@lru_cache(maxsize=None)
def qpoch(n: int) -> QPoly:
    """``(q;q)_n = (1-q)(1-q^2)...(1-q^n)``."""
    if n < 0:
        raise ValueError("qpoch expects n >= 0")
    if n == 0:
        return QPoly(1)
    return qpoch(n - 1) * (1 - QPoly.q_power(n))


def qint(n: int) -> QPoly:
    """``[n]_q = 1 + q + ... + q^(n-1)``."""
    return qsum(QPoly.q_power(i) for i in range(n))


Coeff = Union[int, QPoly]


@dataclass(frozen=True)
class ESeries:
    coeffs: tuple[QPoly, ...]

    def __post_init__(self):
        cs = tuple(c if isinstance(c, QPoly) else QPoly(c) for c in self.coeffs)
        if not cs:
            raise ValueError("an ESeries needs at least the constant coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, coeffs: Iterable[Coeff]) -> "ESeries":
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c: Coeff, order: int) -> "ESeries":
        return cls((c,) + (0,) * order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> QPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> "ESeries":
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return ESeries(self.coeffs[: order + 1])

    def __add__(self, other: "ESeries") -> "ESeries":
        return series_add(self, other)

    def __sub__(self, other: "ESeries") -> "ESeries":
        return series_sub(self, other)

    def __neg__(self) -> "ESeries":
        return series_scale(-1, self)

    def __mul__(self, other: "ESeries | Coeff") -> "ESeries":
        if isinstance(other, ESeries):
            return series_mul(self, other)
        if isinstance(other, (int, QPoly)):
            return series_scale(other, self)
        return NotImplemented

    def __rmul__(self, other: Coeff) -> "ESeries":
        if isinstance(other, (int, QPoly)):
            return series_scale(other, self)
        return NotImplemented

    def __truediv__(self, other: "ESeries") -> "ESeries":
        return series_div(self, other)

    def to_text(self) -> str:
        return "\n".join(f"{n}: {c}" for n, c in enumerate(self.coeffs))

    def __str__(self) -> str:
        return self.to_text()


def _check(f: ESeries, g: ESeries) -> None:
    if f.order != g.order:
        raise OrderMismatch(f"orders differ: {f.order} vs {g.order}")


def series_add(f: ESeries, g: ESeries) -> ESeries:
    _check(f, g)
    return ESeries(tuple(a + b for a, b in zip(f.coeffs, g.coeffs)))


def series_sub(f: ESeries, g: ESeries) -> ESeries:
    _check(f, g)
    return ESeries(tuple(a - b for a, b in zip(f.coeffs, g.coeffs)))


def series_scale(c: Coeff, f: ESeries) -> ESeries:
    return ESeries(tuple(a * c for a in f.coeffs))


def series_mul(f: ESeries, g: ESeries) -> ESeries:
    _check(f, g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(len(a)):
        out.append(
            qsum(qbinom(n, k) * a[k] * b[n - k] for k in range(n + 1) if a[k] and b[n - k])
        )
    return ESeries(tuple(out))


def series_div(f: ESeries, g: ESeries) -> ESeries:
    """The series ``h`` with ``g * h = f``."""
    _check(f, g)
    g0 = g.coeffs[0]
    if not g0.is_unit_monomial():
        raise NonUnitConstantTerm(f"constant term {g0} is not an invertible monomial")
    g0inv = g0.invert_monomial()
    b = g.coeffs
    h: list[QPoly] = []
    for n, fn in enumerate(f.coeffs):
        acc = qsum(qbinom(n, k) * b[k] * h[n - k] for k in range(1, n + 1) if b[k] and h[n - k])
        h.append((fn - acc) * g0inv)
    return ESeries(tuple(h))


def series_subst_q(f: ESeries, m: int) -> ESeries:
    """Substitute ``u -> u q^m``."""
    return ESeries(tuple(a * QPoly.q_power(m * n) for n, a in enumerate(f.coeffs)))


def series_dq(f: ESeries) -> ESeries:
    """q-derivative in ``u``: drops ``a_0`` and lowers the order by one."""
    if f.order < 1:
        raise EmptyOrder("the q-derivative of an order-0 series has no coefficients")
    return ESeries(f.coeffs[1:])


def series_mul_u(f: ESeries) -> ESeries:
    """Multiply by ``u``, keeping the order: ``b_(n+1) = (1 - q^(n+1)) a_n``."""
    out = [QPoly()]
    for n, a in enumerate(f.coeffs[:-1]):
        out.append(a * (1 - QPoly.q_power(n + 1)))
    return ESeries(tuple(out))


def _binom2(n: int) -> int:
    return n * (n - 1) // 2


def _alternating(n: int, parity: int) -> int:
    if n % 2 != parity:
        return 0
    return -1 if (n // 2) % 2 else 1


def _base(name: str, order: int) -> ESeries:
    r = range(order + 1)
    if name == "e_q":
        return ESeries(tuple(QPoly(1) for _ in r))
    if name == "E_q":
        return ESeries(tuple(QPoly.q_power(_binom2(n)) for n in r))
    if name == "cos_q":
        return ESeries(tuple(QPoly(_alternating(n, 0)) for n in r))
    if name == "sin_q":
        return ESeries(tuple(QPoly(_alternating(n, 1)) for n in r))
    if name == "Cos_q":
        return ESeries(tuple(QPoly.q_power(_binom2(n)) * _alternating(n, 0) for n in r))
    if name == "Sin_q":
        return ESeries(tuple(QPoly.q_power(_binom2(n)) * _alternating(n, 1) for n in r))
    if name == "tan_q":
        return series_div(_base("sin_q", order), _base("cos_q", order))
    if name == "sec_q":
        return series_div(ESeries.constant(1, order), _base("cos_q", order))
    if name == "Sec_q":
        return series_div(ESeries.constant(1, order), _base("Cos_q", order))
    raise UnknownName(f"unknown series {name!r}; known: {', '.join(STD_SERIES)}")


STD_SERIES = ("e_q", "E_q", "sin_q", "cos_q", "Sin_q", "Cos_q", "tan_q", "sec_q", "Sec_q")


def std_series(name: str, order: int = DEFAULT_ORDER, arg: Coeff | None = None) -> ESeries:
    """A standard q-series truncated at ``order``, optionally at ``u -> arg*u``."""
    f = _base(name, order)
    if arg is None:
        return f
    arg = arg if isinstance(arg, QPoly) else QPoly(arg)
    out = []
    power = QPoly(1)
    for a in f.coeffs:
        out.append(a * power)
        power = power * arg
    return ESeries(tuple(out))


def gen(g: Grammar, m: EvalMap, a: Expr, order: int = DEFAULT_ORDER) -> ESeries:
    """Eulerian series with coefficients ``m(D^n(a))`` for ``n = 0..order``."""
    out = []
    cur = a
    for n in range(order + 1):
        out.append(evaluate(m, cur))
        if n < order:
            cur = derive(g, cur)
    return ESeries(tuple(out))
