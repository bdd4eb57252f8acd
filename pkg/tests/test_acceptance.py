"""The eleven acceptance criteria, each run exactly through a verification suite.

Run with ``pytest tests/test_acceptance.py -s`` or directly as a script; either
way one PASS/FAIL line is printed per criterion.
"""

import sys

import pytest

from qgram.verify import VerifyOptions, run_suite

CRITERIA = [
    (1, "golden expansions", "golden"),
    (2, "order semantics", "orders"),
    (3, "term counts", "term-counts"),
    (4, "term shapes", "term-shapes"),
    (5, "q-Eulerian oracle equivalence", "q-eulerian"),
    (6, "Roselle oracle equivalence", "roselle"),
    (7, "André oracle equivalence", "andre"),
    (8, "calculus laws", "calculus"),
    (9, "generating-function identities", "gf"),
    (10, "André recurrences", "recurrences"),
    (11, "bijection transport", "bijections"),
]


def evaluate(suite):
    checks = run_suite(suite, VerifyOptions())
    failed = [c for c in checks if not c.passed]
    return checks, failed


def report(number, title, checks, failed):
    tag = "FAIL" if failed or not checks else "PASS"
    line = f"{tag} criterion {number:2d} {title}: {len(checks) - len(failed)}/{len(checks)} checks"
    if failed:
        line += f"; first failure: {failed[0].name} ({failed[0].detail})"
    return line


@pytest.mark.parametrize("number, title, suite", CRITERIA, ids=[s for _, _, s in CRITERIA])
def test_criterion(number, title, suite, capsys):
    checks, failed = evaluate(suite)
    with capsys.disabled():
        print("\n" + report(number, title, checks, failed))
    assert checks
    assert not failed, "\n".join(c.line() for c in failed)


def main():
    bad = 0
    for number, title, suite in CRITERIA:
        checks, failed = evaluate(suite)
        bad += bool(failed) or not checks
        print(report(number, title, checks, failed), flush=True)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
