import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from qgram.errors import GrammarSyntaxError, NegativePowerOfNonMonomial, NotInvertible
from qgram.qpoly import QPoly, invert_monomial

from conftest import VARS, qpolys

P = QPoly.parse
SYMS = sympy.symbols(VARS)


def to_sympy(p):
    env = dict(zip(VARS, SYMS))
    return sympy.expand(sum(c * sympy.Mul(*(env[v] ** e for v, e in m.items())) for m, c in p.terms()))


@pytest.mark.parametrize(
    "expr, expected",
    [
        ("(1+q)*(1-q)", "1-q^2"),
        ("x^-1*y*x", "y"),
        ("(1+q)+(q+q^2)", "1+2*q+q^2"),
        ("(x-y)^2", "x^2-2*x*y+y^2"),
        ("(x*q)^-1", "q^-1*x^-1"),
        ("(1+q)^0", "1"),
    ],
)
def test_small_identities(expr, expected):
    assert P(expr) == P(expected)


def test_invert_monomial():
    assert invert_monomial(P("y")) == P("y^-1")
    assert invert_monomial(P("x*q^3")) == P("x^-1*q^-3")
    with pytest.raises(NotInvertible):
        invert_monomial(P("1+q"))
    with pytest.raises(NotInvertible):
        invert_monomial(P("2*x"))


def test_negative_power_needs_monomial():
    with pytest.raises(NegativePowerOfNonMonomial):
        P("1+q") ** -1
    assert P("-x") ** -2 == P("x^-2")


def test_unknown_name_is_rejected():
    with pytest.raises(GrammarSyntaxError):
        P("w + 1")


def test_zero_and_constants():
    assert QPoly() == 0
    assert not QPoly()
    assert P("3 - 3") == 0
    assert P("2*q^0").is_monomial()
    assert P("q-q").to_text() == "0"


@given(qpolys())
def test_text_round_trip(p):
    assert P(p.to_text()) == p


@given(qpolys(), qpolys(), qpolys())
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(qpolys(), qpolys())
def test_product_agrees_with_sympy(a, b):
    assert to_sympy(a * b) == sympy.expand(to_sympy(a) * to_sympy(b))


@given(qpolys(max_terms=3, lo=-1, hi=2), st.integers(0, 4))
def test_power_agrees_with_repeated_product(a, k):
    expected = QPoly(1)
    for _ in range(k):
        expected = expected * a
    assert a**k == expected


def test_subs():
    p = P("x^2*y + q*x*y^2")
    assert p.subs({"x": 1, "y": 1}) == P("1+q")
    assert p.subs({"q": 1, "x": P("t"), "y": 1}) == P("t^2+t")
