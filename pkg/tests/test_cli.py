import json
import subprocess
import sys
from pathlib import Path

import pytest

from qgram.cli import main
from qgram.freealg import Expr
from qgram.golden import expansion
from qgram.oracle import eulerian_poly
from qgram.qpoly import QPoly
from qgram.serialize import from_json

GRAMMARS = Path(__file__).resolve().parent.parent / "grammars"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


def test_derive_prints_canonical_text(capsys):
    code, out, _ = run(capsys, "derive", "--catalog", "G_tan", "-n", "2")
    assert code == 0
    assert out == expansion("G_tan", "x[0]", 2).to_text()
    assert Expr.parse(out) == Expr.parse("(1+q)*x[1] + x[1]^2*x[0] + q*x[2]*x[1]^2")


def test_derive_json_and_all(capsys):
    code, out, _ = run(capsys, "derive", "--catalog", "G_tan'", "-n", "2", "--json")
    assert code == 0
    assert from_json(out) == expansion("G_tan'", "x[0]", 2)
    code, out, _ = run(capsys, "derive", "--catalog", "G_inv", "-n", "2", "--all")
    assert out.splitlines()[0] == "D^0: x[0]"
    assert len(out.splitlines()) == 3


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--catalog", "G_AndI", "-n", "6")
    assert (code, out) == (0, "1 2 4 9 21 51")


def test_eval_matches_oracle(capsys):
    code, out, _ = run(capsys, "eval", "--file", str(GRAMMARS / "maj.qg"), "-n", "4")
    assert code == 0
    assert QPoly.parse(out) == eulerian_poly(4, "maj")


def test_seed_override(capsys):
    code, out, _ = run(capsys, "derive", "--file", str(GRAMMARS / "shift.qg"), "--seed", "x[0]*x[1]^-1", "-n", "2")
    assert code == 0
    assert Expr.parse(out) == Expr.parse("q^2*x[0]*x[1]^-1 - (q+q^2)*x[1]*x[2]^-1 + q*x[2]*x[3]^-1")


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--std", "tan_q", "-N", "3")
    assert code == 0
    assert out.splitlines()[-1] == "3: q+q^2"
    code, out, _ = run(capsys, "series", "--catalog", "G_inv", "-N", "1", "--json")
    assert json.loads(out)["order"] == 1


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "eulerian-inv", "-n", "2")
    assert QPoly.parse(out) == QPoly.parse("x^2*y + q*x*y^2")
    code, out, _ = run(capsys, "oracle", "motzkin", "-n", "4")
    assert out == "9"
    code, _, err = run(capsys, "oracle", "roselle", "-n", "9")
    assert code == 2 and "error" in err


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "list", "--ids")
    assert code == 0 and len(out.splitlines()) == 13
    code, out, _ = run(capsys, "catalog", "show", "G_inv")
    assert out == (GRAMMARS / "inv.qg").read_text().split("\n", 1)[1].strip()
    code, out, _ = run(capsys, "catalog", "list")
    assert out.count("grammar ") == 13


def test_verify_pass_and_json(capsys):
    code, out, _ = run(capsys, "verify", "q-eulerian", "-N", "6")
    assert code == 0
    assert out.splitlines()[-1].endswith(" 0 failed")
    code, out, _ = run(capsys, "verify", "orders", "--json")
    assert code == 0 and all(c["passed"] for c in json.loads(out))


@pytest.mark.parametrize(
    "argv",
    [
        ["derive"],
        ["derive", "--catalog", "G_nope"],
        ["derive", "--catalog", "G_tan", "--seed", "w[0]"],
        ["derive", "--catalog", "G_tan", "--seed", "x[0"],
        ["derive", "--file", "/nonexistent.qg"],
        ["eval", "--file", str(GRAMMARS / "shift.qg"), "--seed", "y[0]"],
        ["verify", "no-such-suite"],
        ["catalog", "show"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("qgram: error:")


def test_bad_grammar_file(tmp_path, capsys):
    f = tmp_path / "bad.qg"
    f.write_text("grammar g; masters x; order KSO; rule x[j] -> q^j * w[j];")
    code, _, err = run(capsys, "derive", "--file", str(f))
    assert code == 2 and "w" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["derive", "--catalog", "G_tan", "-n", "-1"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qgram", "count", "--catalog", "G_inv", "-n", "5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 2 4 8 16"


def test_verify_failure_exits_1(capsys, monkeypatch):
    from qgram import verify

    broken = [verify.Check("orders", "planted failure", False, "expected 1, got 2")]
    monkeypatch.setitem(verify.SUITES, "orders", lambda opts: broken)
    code, out, _ = run(capsys, "verify", "orders")
    assert code == 1
    assert out.splitlines()[0] == "FAIL orders: planted failure  (expected 1, got 2)"
