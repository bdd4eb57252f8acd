import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgram.freealg import Expr, Letter, Word, reduce, up_arrow, word_inverse
from qgram.qpoly import QPoly

from conftest import letters, qpolys

E = Expr.parse


def w(text):
    (word,) = E(text).words()
    return word


def naive_reduce(seq, rng):
    # cancel a random adjacent inverse pair until none is left
    seq = list(seq)
    while True:
        spots = [i for i in range(len(seq) - 1) if seq[i] == seq[i + 1].inverse()]
        if not spots:
            return tuple(seq)
        i = rng.choice(spots)
        del seq[i : i + 2]


@given(st.lists(letters(max_index=1), max_size=8), st.integers(0, 2**16))
def test_reduction_is_confluent(seq, seed):
    assert tuple(reduce(seq)) == naive_reduce(seq, random.Random(seed))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("x[0]*x[0]^-1", "1"),
        ("x[1]*x[0]*x[0]^-1*x[1]^-1", "1"),
        ("x[0]*y[0]*y[1]^-1", "x[0]*y[0]*y[1]^-1"),
    ],
)
def test_reduce_examples(text, expected):
    assert E(text) == E(expected)


def test_word_inverse():
    assert word_inverse(w("x[1]*x[2]")) == w("x[2]^-1*x[1]^-1")
    assert word_inverse(Word()) == Word()
    assert word_inverse(w("y[2]^-1*x[0]")) == w("x[0]^-1*y[2]")


@given(st.lists(letters(), max_size=6))
def test_inverse_cancels(seq):
    word = reduce(seq)
    assert reduce(word + word.inverse()) == Word()


def test_products_and_scaling():
    assert E("x[0]") * E("x[0]^-1") == Expr.const(1)
    lhs = E("(1+q)*y[1]^2*x[1]^-1*x[2]").scale(QPoly.var("q"))
    assert lhs == E("(q+q^2)*y[1]^2*x[1]^-1*x[2]")
    assert (E("x[0]") + E("y[0]")) * E("x[1]") == E("x[0]*x[1] + y[0]*x[1]")


def test_up_arrow():
    a = E("y[2]^-1*x[0]*x[0]*y[1]")
    assert up_arrow(a) == E("y[3]^-1*x[1]*x[1]*y[2]")
    assert up_arrow(a, 3) == E("y[5]^-1*x[3]*x[3]*y[4]")
    assert up_arrow(Expr.const(1)) == Expr.const(1)


def test_omega():
    assert Expr.zero().omega() == 0
    assert E("x[0] + x[1] - x[0]").omega() == 1


def test_text_form_is_canonical():
    a = E("q*x[2]*x[1]^2 + (1+q)*x[1] + x[1]*x[1]*x[0]")
    assert a.to_text() == "(1+q)*x[1] + x[1]^2*x[0] + q*x[2]*x[1]^2"
    assert E(a.to_text()) == a


@st.composite
def exprs(draw):
    out = Expr.zero()
    for _ in range(draw(st.integers(0, 3))):
        seq = draw(st.lists(letters(), max_size=3))
        out = out + Expr.word(seq, draw(qpolys(max_terms=2)))
    return out


@given(exprs(), exprs(), exprs())
def test_algebra_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a - a == Expr.zero()
    assert E(a.to_text()) == a


@given(exprs(), exprs(), st.integers(1, 3))
def test_up_arrow_is_a_homomorphism(a, b, k):
    assert up_arrow(a * b, k) == up_arrow(a, k) * up_arrow(b, k)
    assert up_arrow(a + b, k) == up_arrow(a, k) + up_arrow(b, k)


def test_letters_order_by_master_index_sign():
    assert Letter("x", 0) < Letter("x", 1) < Letter("y", 0)


def test_up_arrow_rejects_non_positive_shift():
    with pytest.raises(ValueError):
        up_arrow(E("x[0]"), 0)
