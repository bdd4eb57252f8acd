import pytest

from qgram.catalog import CATALOG_IDS, get_entry, law, resolve_id, term_count
from qgram.dsl import format_grammar, parse_grammar_file
from qgram.errors import NoLawRecorded, UnknownId
from qgram.freealg import Expr
from qgram.grammar import iterates
from qgram.oracle import sequences
from qgram.qpoly import QPoly


def test_thirteen_entries():
    assert len(CATALOG_IDS) == 13
    assert resolve_id("G_tan_sec") == "G_tan∪sec"
    with pytest.raises(UnknownId):
        get_entry("G_cot")


def test_entry_shapes():
    inv = get_entry("G_inv").grammar
    assert inv.masters == ("x", "y") and inv.order.value == "AIO"
    assert inv.rule("x").instantiate(2) == inv.rule("y").instantiate(2) == Expr.parse("q^2*y[2]*x[3]")
    andii = get_entry("G_AndII").grammar
    assert andii.rule("y").instantiate(0) == Expr.parse("q*x[1]")
    cyc = get_entry("G_cyc").grammar
    assert len(cyc.masters) == 4
    assert cyc.rule("e").instantiate(0) == Expr.parse("beta*e[0]*z[1]")


def test_seeds():
    seeds = {id: get_entry(id).seed.to_text() for id in CATALOG_IDS}
    assert seeds["G_cyc"] == "e[0]"
    assert {seeds[i] for i in ("G_sec", "G_sec'", "G_Sec", "G_Sec'")} == {"y[0]"}
    assert seeds["G_tan"] == seeds["G_tan∪sec"] == "x[0]"


def test_term_count_examples():
    assert term_count("G_tan", 4) == 20
    assert term_count("G_AndI", 6) == 51
    assert term_count("G_inv", 5) == 16
    with pytest.raises(NoLawRecorded):
        law("G_Sec'", 3)
    with pytest.raises(NoLawRecorded):
        law("G_maj", 3)
    with pytest.raises(NoLawRecorded):
        term_count("G_maj", 40)
    assert term_count("G_maj", 3) == 6


@pytest.mark.parametrize("id", [i for i in CATALOG_IDS if i not in ("G_Sec'", "G_maj")])
def test_laws_reproduce_recorded_values(id):
    e = get_entry(id)
    assert [law(id, n) for n in range(1, len(e.golden) + 1)] == list(e.golden)


def test_named_sequences_match_laws():
    for n in range(1, 13):
        assert law("G_AndI", n) == sequences("motzkin", n)
        assert law("G_AndII", n) == law("G_sec'", n) == sequences("fibonacci", n + 1)
        assert law("G_tan'", n) == sequences("fibonacci", n + 2)


@pytest.mark.parametrize("id", CATALOG_IDS)
def test_counts_match_derivations(id):
    e = get_entry(id)
    top = 7 if id != "G_maj" else 6
    counts = [a.omega() for a in iterates(e.grammar, e.seed, top)[1:]]
    assert counts == list(e.golden[:top])


@pytest.mark.parametrize("id", CATALOG_IDS)
def test_dsl_round_trip(id):
    e = get_entry(id)
    g, m, seed = parse_grammar_file(format_grammar(e.grammar, e.evalmap, e.seed))
    assert (g, m, seed) == (e.grammar, e.evalmap, e.seed)


def test_maj_map_depends_on_index():
    m = get_entry("G_maj").evalmap
    assert m.image("x", 3) == QPoly.parse("x*q^3")
