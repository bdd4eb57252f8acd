import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qgram.catalog import CATALOG_IDS, get_entry
from qgram.dsl import format_grammar, parse_grammar, parse_grammar_file
from qgram.errors import GrammarSyntaxError, SchemaError, SemanticError
from qgram.freealg import Expr, Word
from qgram.grammar import derive_n
from qgram.qpoly import QPoly
from qgram.qseries import std_series
from qgram.serialize import from_json, to_json

from conftest import letters, qpolys

INV = """
# inversions
grammar G_inv;
masters x, y;
order AIO;
rule x[j] -> q^j * y[j] * x[j+1];
rule y[j] -> q^j * y[j] * x[j+1];
eval x[j] -> x;
eval y[j] -> y;
seed x[0];
"""


def test_file_matches_catalog():
    g, m, seed = parse_grammar(INV)
    e = get_entry("G_inv")
    assert g == e.grammar and m == e.evalmap and seed == e.seed


def test_optional_clauses():
    text = "grammar g; masters x; order KSO; rule x[j] -> q^j * x[j+1];"
    g, m, seed = parse_grammar(text)
    assert m is None and seed is None
    assert derive_n(g, Expr.parse("x[0]"), 2) == Expr.parse("q*x[2]")


@pytest.mark.parametrize(
    "text",
    [
        "grammar g; masters x; order KSO; rule x[j] -> q^j * w[j];",
        "grammar g; masters x, y; order KSO; rule x[j] -> x[j+1];",
        "grammar g; masters x; order KSO; rule x[j] -> x[j-1];",
        "grammar g; masters x; order KSO; rule x[j] -> x[j]; eval x[j] -> x + 1;",
        "grammar g; masters x; order XYZ; rule x[j] -> x[j];",
        "grammar g; masters x; order KSO; rule x[j] -> x[j]; rule x[j] -> x[j];",
        "grammar g; masters x; order KSO; rule x[j] -> x[j]; seed w[0];",
    ],
)
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse_grammar(text)


def test_syntax_error_position():
    with pytest.raises(GrammarSyntaxError) as info:
        parse_grammar("grammar g;\nmasters x;\norder KSO;\nrule x[j] -> q^j * (x[j];\n")
    assert info.value.lineno == 4
    assert info.value.offset > 1
    assert isinstance(info.value, SyntaxError)


@pytest.mark.parametrize(
    "text",
    [
        "grammar g; masters x order KSO;",
        "grammar g; masters x; order KSO; rule x[j] -> x[j*2];",
        "grammar g; masters x; order KSO; rule x[j] -> x[j] +;",
    ],
)
def test_syntax_errors(text):
    with pytest.raises(GrammarSyntaxError):
        parse_grammar(text)


@pytest.mark.parametrize("id", CATALOG_IDS)
def test_print_parse_identity(id):
    e = get_entry(id)
    text = format_grammar(e.grammar, e.evalmap, e.seed)
    assert format_grammar(*parse_grammar_file(text)) == text


# -- json -------------------------------------------------------------------


def test_empty_expr():
    assert to_json(Expr.zero()) == '{"terms":[]}'
    assert from_json('{"terms":[]}') == Expr.zero()


@pytest.mark.parametrize("id", CATALOG_IDS)
def test_derivative_round_trip_is_byte_identical(id):
    e = get_entry(id)
    a = derive_n(e.grammar, e.seed, 3)
    text = to_json(a)
    assert to_json(from_json(text)) == text
    assert from_json(text) == a


@pytest.mark.parametrize("id", CATALOG_IDS)
def test_grammar_round_trip(id):
    g = get_entry(id).grammar
    assert from_json(to_json(g)) == g


def test_series_and_word_round_trip():
    s = std_series("tan_q", 5)
    assert from_json(to_json(s)) == s
    w = Word(Expr.parse("x[1]*y[2]^-1").words()[0])
    assert from_json(to_json(w)) == w


@given(qpolys())
def test_qpoly_round_trip(p):
    assert from_json(to_json(p)) == p


@given(st.lists(letters(), max_size=5), qpolys(max_terms=2))
def test_expr_round_trip(seq, c):
    a = Expr.word(seq, c) + Expr.word(seq[:1])
    assert from_json(to_json(a)) == a


@pytest.mark.parametrize(
    "text",
    [
        '[{"coeff": 1, "exponents": {"q": "2"}}]',
        '[{"coeff": 1.5, "exponents": {}}]',
        '[{"coeff": 1, "exponents": {"w": 1}}]',
        '{"letters": [{"master": "x", "index": -1, "sign": 1}]}',
        '{"letters": [{"master": "x", "index": 0, "sign": 2}]}',
        '{"terms": [{"coefficient": [], "word": {}}]}',
        '{"order": 2, "coeffs": [[]]}',
        '{"name": "g", "masters": ["x"], "order": "ZZZ", "rules": []}',
        '{"surprise": 1}',
        "not json",
    ],
)
def test_schema_errors(text):
    with pytest.raises(SchemaError):
        from_json(text)


def test_json_is_canonical():
    a = Expr.parse("y[0] + 2*x[0]")
    data = json.loads(to_json(a))
    assert [t["word"]["letters"][0]["master"] for t in data["terms"]] == ["x", "y"]
    assert to_json(QPoly.parse("q + 1")) == '[{"coeff":1,"exponents":{}},{"coeff":1,"exponents":{"q":1}}]'
