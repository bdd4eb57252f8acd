import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgram.catalog import get_entry
from qgram.errors import NotInvertible, UnknownMaster
from qgram.evalmap import EvalMap, evaluate, is_master_linear
from qgram.freealg import Expr
from qgram.grammar import apply_order
from qgram.qpoly import QPoly

from conftest import letters, qpolys

E, P = Expr.parse, QPoly.parse
PLAIN = EvalMap.of({"x": "x", "y": "y"})
SHIFTED = EvalMap.of({"x": ("x", 1), "y": ("y", 1)})


def test_examples():
    tan = EvalMap.of({"x": "x"})
    d2 = E("(1+q)*x[1] + x[1]^2*x[0] + q*x[2]*x[1]^2")
    assert evaluate(tan, d2) == P("(1+q)*x + (1+q)*x^3")
    assert evaluate(SHIFTED, E("x[1]*y[0]")) == P("q*x*y")
    assert evaluate(PLAIN, E("y[0]^-1")) == P("y^-1")


def test_master_linear():
    assert is_master_linear(PLAIN)
    assert not is_master_linear(SHIFTED)
    assert is_master_linear(EvalMap(()))
    assert not is_master_linear(get_entry("G_maj").evalmap)


def test_errors():
    with pytest.raises(UnknownMaster):
        evaluate(PLAIN, E("z[0]"))
    with pytest.raises(NotInvertible):
        EvalMap.of({"x": "1+x"})
    with pytest.raises(NotInvertible):
        EvalMap.of({"x": "2*x"})


@st.composite
def exprs(draw):
    out = Expr.zero()
    for _ in range(draw(st.integers(0, 3))):
        out = out + Expr.word(draw(st.lists(letters(max_index=3), max_size=4)), draw(qpolys(max_terms=2)))
    return out


@given(exprs(), exprs(), st.sampled_from([PLAIN, SHIFTED]))
def test_homomorphism(a, b, m):
    assert evaluate(m, a * b) == evaluate(m, a) * evaluate(m, b)
    assert evaluate(m, a + b) == evaluate(m, a) + evaluate(m, b)


@given(st.lists(letters(max_index=3), max_size=5), st.sampled_from([PLAIN, SHIFTED]))
def test_inverse_word(seq, m):
    w = Expr.word(seq)
    (word,) = w.words()
    assert evaluate(m, w) * evaluate(m, Expr.word(word.inverse())) == 1


@given(exprs(), st.sampled_from(["KSO", "LPO", "AIO", "DIO"]), st.sampled_from([PLAIN, SHIFTED]))
def test_order_is_invisible(a, order, m):
    assert evaluate(m, apply_order(order, a, ("x", "y"))) == evaluate(m, a)
