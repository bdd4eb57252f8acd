"""Canonical JSON for polynomials, words, expressions, series and grammars.

The value kind is recognised from its shape, so no type tags are written:
a list is a QPoly, ``{"letters"}`` a Word, ``{"terms"}`` an Expr,
``{"order", "coeffs"}`` an ESeries and ``{"masters", "rules"}`` a Grammar.
"""

from __future__ import annotations

import json
from typing import Any

from .errors import SchemaError
from .freealg import Expr, Letter, Word
from .grammar import Grammar, IndexExpr, LetterTemplate, Order, RuleTemplate
from .qpoly import QPoly
from .qseries import ESeries

__all__ = ["to_json", "from_json", "to_data", "from_data"]


def _poly_data(p: QPoly) -> list:
    return [{"coeff": c, "exponents": e} for e, c in p.terms()]


def _letter_data(l: Letter) -> dict:
    return {"master": l.master, "index": l.index, "sign": l.sign}


def _word_data(w) -> dict:
    return {"letters": [_letter_data(l) for l in w]}


def _template_data(l: LetterTemplate) -> dict:
    return {
        "master": l.master,
        "index": {"offset": l.index.offset, "relative": l.index.relative},
        "sign": l.sign,
    }


def _rule_data(r: RuleTemplate) -> dict:
    return {
        "master": r.master,
        "a": r.a,
        "b": r.b,
        "c0": _poly_data(r.c0),
        "words": [
            {"weight": _poly_data(w), "letters": [_template_data(l) for l in letters]}
            for w, letters in r.words
        ],
    }


def to_data(value: Any) -> Any:
    """Plain JSON-ready structure for a supported value."""
    if isinstance(value, QPoly):
        return _poly_data(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return _poly_data(QPoly(value))
    if isinstance(value, Word):
        return _word_data(value)
    if isinstance(value, Expr):
        return {
            "terms": [
                {"coefficient": _poly_data(c), "word": _word_data(w)} for w, c in value.terms()
            ]
        }
    if isinstance(value, ESeries):
        return {"order": value.order, "coeffs": [_poly_data(c) for c in value.coeffs]}
    if isinstance(value, Grammar):
        return {
            "name": value.name,
            "masters": list(value.masters),
            "order": value.order.value,
            "rules": [_rule_data(r) for r in value.rules],
        }
    raise TypeError(f"cannot serialize {type(value).__name__}")


def to_json(value: Any) -> str:
    return json.dumps(to_data(value), sort_keys=True, separators=(",", ":"), ensure_ascii=False)


# -- reading ------------------------------------------------------------------


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise SchemaError(msg)


def _int(v: Any, what: str) -> int:
    _need(isinstance(v, int) and not isinstance(v, bool), f"{what} must be an integer, got {v!r}")
    return v


def _str(v: Any, what: str) -> str:
    _need(isinstance(v, str), f"{what} must be a string, got {v!r}")
    return v


def _keys(d: Any, required: set, what: str) -> dict:
    _need(isinstance(d, dict), f"{what} must be an object")
    _need(set(d) == required, f"{what} must have keys {sorted(required)}, got {sorted(d)}")
    return d


def _poly(data: Any) -> QPoly:
    _need(isinstance(data, list), "a polynomial must be a list of terms")
    out = QPoly()
    for term in data:
        term = _keys(term, {"coeff", "exponents"}, "polynomial term")
        coeff = _int(term["coeff"], "coeff")
        exps = term["exponents"]
        _need(isinstance(exps, dict), "exponents must be an object")
        for name, e in exps.items():
            _int(e, f"exponent of {name}")
        try:
            out = out + QPoly.monomial(coeff, exps)
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    return out


def _letter(d: Any) -> Letter:
    d = _keys(d, {"master", "index", "sign"}, "letter")
    index = _int(d["index"], "index")
    sign = _int(d["sign"], "sign")
    _need(index >= 0, "index must be non-negative")
    _need(sign in (1, -1), "sign must be 1 or -1")
    return Letter(_str(d["master"], "master"), index, sign)


def _word(d: Any) -> Word:
    d = _keys(d, {"letters"}, "word")
    _need(isinstance(d["letters"], list), "letters must be a list")
    return Word(_letter(l) for l in d["letters"])


def _template(d: Any) -> LetterTemplate:
    d = _keys(d, {"master", "index", "sign"}, "letter template")
    idx = _keys(d["index"], {"offset", "relative"}, "index expression")
    _need(isinstance(idx["relative"], bool), "relative must be a boolean")
    sign = _int(d["sign"], "sign")
    _need(sign in (1, -1), "sign must be 1 or -1")
    return LetterTemplate(
        _str(d["master"], "master"), IndexExpr(_int(idx["offset"], "offset"), idx["relative"]), sign
    )


def _rule(d: Any) -> RuleTemplate:
    d = _keys(d, {"master", "a", "b", "c0", "words"}, "rule")
    _need(isinstance(d["words"], list), "words must be a list")
    words = []
    for w in d["words"]:
        w = _keys(w, {"weight", "letters"}, "rule word")
        _need(isinstance(w["letters"], list), "letters must be a list")
        words.append((_poly(w["weight"]), tuple(_template(l) for l in w["letters"])))
    return RuleTemplate(
        _str(d["master"], "master"),
        _int(d["a"], "a"),
        _int(d["b"], "b"),
        _poly(d["c0"]),
        tuple(words),
    )


def from_data(data: Any) -> Any:
    if isinstance(data, list):
        return _poly(data)
    _need(isinstance(data, dict), "expected a list or an object")
    keys = set(data)
    if keys == {"letters"}:
        return _word(data)
    if keys == {"terms"}:
        _need(isinstance(data["terms"], list), "terms must be a list")
        acc = Expr.zero()
        for t in data["terms"]:
            t = _keys(t, {"coefficient", "word"}, "expression term")
            acc = acc + Expr.word(_word(t["word"]), _poly(t["coefficient"]))
        return acc
    if keys == {"order", "coeffs"}:
        order = _int(data["order"], "order")
        _need(isinstance(data["coeffs"], list), "coeffs must be a list")
        _need(len(data["coeffs"]) == order + 1, "coeffs must have order+1 entries")
        return ESeries(tuple(_poly(c) for c in data["coeffs"]))
    if keys == {"name", "masters", "order", "rules"}:
        _need(isinstance(data["masters"], list), "masters must be a list")
        _need(isinstance(data["rules"], list), "rules must be a list")
        try:
            order = Order(_str(data["order"], "order"))
        except ValueError as exc:
            raise SchemaError(f"unknown order {data['order']!r}") from exc
        try:
            return Grammar(
                _str(data["name"], "name"),
                tuple(_str(m, "master") for m in data["masters"]),
                tuple(_rule(r) for r in data["rules"]),
                order,
            )
        except (ValueError, KeyError) as exc:
            raise SchemaError(str(exc)) from exc
    raise SchemaError(f"unrecognised object with keys {sorted(keys)}")


def from_json(text: str) -> Any:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from exc
    return from_data(data)
