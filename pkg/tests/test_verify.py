import pytest

from qgram.catalog import CATALOG_IDS, get_entry
from qgram.freealg import Expr
from qgram.grammar import reorder_cancellations
from qgram.verify import SUITE_NAMES, VerifyOptions, run, run_suite, tan_form_words, tan_word_forms
from qgram.grammar import derive_n


def test_reports_are_deterministic():
    opts = VerifyOptions(seed=7, cases=20)
    assert run(["orders", "calculus"], opts) == run(["orders", "calculus"], opts)


def test_random_checks_leave_catalog_untouched():
    before = [reorder_cancellations(get_entry(i).grammar) for i in CATALOG_IDS]
    run_suite("calculus", VerifyOptions(seed=3, cases=40))
    assert [reorder_cancellations(get_entry(i).grammar) for i in CATALOG_IDS] == before


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    assert "all" in SUITE_NAMES


def test_order_option_bounds_sizes():
    checks = run_suite("q-eulerian", VerifyOptions(order=3))
    assert all(c.passed for c in checks)
    assert len(checks) == 2 * 3 + 1


@pytest.mark.parametrize("n", range(3, 8))
def test_tan_shapes_both_ways(n):
    # each word has exactly one shape, and every word of a shape occurs
    d = derive_n(get_entry("G_tan").grammar, Expr.parse("x[0]"), n)
    assert all(len(tan_word_forms(w, n)) == 1 for w in d.words())
    assert set(d.words()) == tan_form_words(n)
