import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgram.catalog import get_entry
from qgram.errors import UnknownMaster
from qgram.freealg import Expr, Letter, up_arrow
from qgram.golden import ORDER_EXAMPLE, ORDER_RESULTS, expansion
from qgram.grammar import (
    apply_order,
    derive,
    derive_n,
    is_q_linear,
    reorder_cancellations,
    rule_apply,
)
from qgram.qpoly import QPoly
from qgram.qseries import qbinom

from conftest import letters, qpolys

E = Expr.parse
q = QPoly.var("q")


def G(id):
    return get_entry(id).grammar


# q-linear grammars: the catalog's KSO entries plus KSO variants of the others
Q_LINEAR = {
    "G_cyc": G("G_cyc"),
    "G_binv": G("G_binv"),
    "G_inv/KSO": G("G_inv").with_order("KSO"),
    "G_AndI/KSO": G("G_AndI").with_order("KSO"),
    "G_AndII/KSO": G("G_AndII").with_order("KSO"),
    "G_tan∪sec/KSO": G("G_tan∪sec").with_order("KSO"),
}


@pytest.mark.parametrize("order", ["KSO", "LPO", "AIO", "DIO"])
def test_orders_on_worked_expression(order):
    assert apply_order(order, E(ORDER_EXAMPLE), ("x", "y")) == E(ORDER_RESULTS[order])
    assert apply_order(order, E(ORDER_EXAMPLE), ("x", "y")).to_text() == E(ORDER_RESULTS[order]).to_text()


def test_order_ignores_sign_and_is_stable():
    a = E("y[1]*x[1]^-1*x[1]^-1*y[0]")
    assert apply_order("AIO", a, ("x", "y")) == E("y[0]*x[1]^-2*y[1]")
    assert apply_order("LPO", a, ("x", "y")) == E("x[1]^-2*y[0]*y[1]")


def test_rule_apply():
    assert rule_apply(G("G_tan"), Letter("x", 1)) == E("q + q*x[1]*x[2]")
    assert rule_apply(G("G_maj"), Letter("x", 3)) == E("q^3*x[0]*y[0]")
    assert rule_apply(G("G_inv"), Letter("y", 0, -1)) == E("-x[1]*y[1]^-1")
    with pytest.raises(UnknownMaster):
        rule_apply(G("G_tan"), Letter("w", 0))


def test_derive_examples():
    assert derive(G("G_tan"), E("x[0]")) == E("1 + x[1]*x[0]")
    assert derive_n(G("G_tan'"), E("x[0]"), 2) == expansion("G_tan'", "x[0]", 2)
    assert derive_n(G("G_tan"), E("x[0]"), 2) == expansion("G_tan", "x[0]", 2)
    assert derive(G("G_tan∪sec"), E("y[0]")) == E("y[1]*x[0]")
    assert derive_n(G("G_tan∪sec"), E("y[0]"), 3) == expansion("G_tan∪sec", "y[0]", 3)
    assert derive_n(G("G_tan"), E("x[0]"), 0) == E("x[0]")


@pytest.mark.parametrize("id", ["G_tan", "G_inv", "G_cyc", "G_maj"])
def test_derivative_of_trivial_product_vanishes(id):
    g = G(id)
    m = g.masters[0]
    assert derive(g, Expr.letter(m, 0) * Expr.letter(m, 0, -1)) == Expr.zero()
    assert derive(g, Expr.const(5)) == Expr.zero()


def test_q_linearity_flags():
    assert is_q_linear(G("G_cyc"))
    assert not is_q_linear(G("G_tan"))
    assert not is_q_linear(G("G_maj"))
    assert not is_q_linear(G("G_maj").with_order("KSO"))
    for g in Q_LINEAR.values():
        assert is_q_linear(g)


def test_catalog_derivations_never_cancel_on_reorder():
    for e in map(get_entry, ["G_tan", "G_sec", "G_inv", "G_AndI", "G_AndII"]):
        derive_n(e.grammar, e.seed, 6)
        assert reorder_cancellations(e.grammar) == 0


def test_reorder_cancellation_is_flagged(caplog):
    # DIO turns the summand x1^-1 x0 x1 into x1^-1 x1 x0, which cancels
    g = G("G_tan").renamed("G_tan/probe")
    with caplog.at_level(logging.WARNING, logger="qgram.grammar"):
        out = derive(g, E("x[1]^-1*x[0]"))
    assert out == E("x[0] + x[1]^-1 - q*x[1] - q*x[2]^-1")
    assert reorder_cancellations(g) > 0
    assert "cancelled letters" in caplog.text


# -- calculus laws with hypothesis -------------------------------------------


def word_exprs(masters, max_len=3):
    return st.lists(letters(masters), max_size=max_len).map(lambda ls: Expr.word(ls))


@st.composite
def exprs(draw, masters):
    out = Expr.zero()
    for _ in range(draw(st.integers(0, 3))):
        out = out + draw(word_exprs(masters)).scale(draw(qpolys(max_terms=2)))
    return out


@st.composite
def grammar_and_exprs(draw, pool, count=2):
    name = draw(st.sampled_from(sorted(pool)))
    g = pool[name]
    return (g,) + tuple(draw(exprs(g.masters)) for _ in range(count))


ALL = {id: G(id) for id in ("G_tan", "G_sec", "G_inv", "G_cyc", "G_AndII", "G_maj")}


@given(grammar_and_exprs(ALL), qpolys(max_terms=2))
def test_linearity(gab, c):
    g, a, b = gab
    assert derive(g, a + b) == derive(g, a) + derive(g, b)
    assert derive(g, a.scale(c)) == derive(g, a).scale(c)


@given(grammar_and_exprs(Q_LINEAR))
def test_product_rule(gab):
    g, a, b = gab
    assert derive(g, a * b) == derive(g, a) * up_arrow(b) + a * derive(g, b)


@given(st.sampled_from(sorted(Q_LINEAR)), st.data())
def test_inverse_rule(name, data):
    g = Q_LINEAR[name]
    w = data.draw(word_exprs(g.masters))
    (word,) = w.words()
    inv = Expr.word(word.inverse())
    assert derive(g, inv) == -inv * derive(g, w) * up_arrow(inv)


@given(grammar_and_exprs(Q_LINEAR, 1), st.integers(1, 3), st.integers(0, 3))
def test_up_arrow_commutes(ga, m, n):
    g, a = ga
    lhs = derive_n(g, up_arrow(a, m), n)
    assert lhs == up_arrow(derive_n(g, a, n), m).scale(q ** (n * m))


@given(st.sampled_from(["G_cyc", "G_inv/KSO", "G_AndII/KSO"]), st.data(), st.integers(0, 4))
def test_q_leibniz(name, data, n):
    g = Q_LINEAR[name]
    f = data.draw(word_exprs(g.masters, 2))
    h = data.draw(word_exprs(g.masters, 2))
    rhs = Expr.zero()
    for k in range(n + 1):
        dh = derive_n(g, h, n - k)
        rhs = rhs + (derive_n(g, f, k) * (up_arrow(dh, k) if k else dh)).scale(qbinom(n, k))
    assert derive_n(g, f * h, n) == rhs
