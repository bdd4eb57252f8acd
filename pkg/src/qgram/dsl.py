"""Text format for grammars.

A grammar file is a list of ``;``-terminated clauses; ``#`` starts a comment::

    grammar G_inv;
    masters x, y;
    order AIO;
    rule x[j] -> q^j * y[j] * x[j+1];
    rule y[j] -> q^j * y[j] * x[j+1];
    eval x[j] -> x;
    eval y[j] -> y;
    seed x[0];

:func:`format_grammar` prints the canonical form that :func:`parse_grammar`
reads back to an equal :class:`~qgram.grammar.Grammar`.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._lex import TokenStream
from .errors import NotInvertible, SemanticError
from .evalmap import EvalMap
from .freealg import Expr, parse_expr_sum
from .grammar import Grammar, IndexExpr, LetterTemplate, Order, RuleTemplate
from .qpoly import QPoly, alphabet

__all__ = [
    "GrammarFile",
    "parse_grammar",
    "parse_grammar_file",
    "format_grammar",
    "format_rule",
    "make_rule",
]

KEYWORDS = ("grammar", "masters", "order", "rule", "eval", "seed")


@dataclass(frozen=True)
class GrammarFile:
    grammar: Grammar
    evalmap: EvalMap | None = None
    seed: Expr | None = None

    def __iter__(self):
        return iter((self.grammar, self.evalmap, self.seed))


# -- template expressions -------------------------------------------------------
#
# A template term is (a, coeff, letters) standing for q^(a*j) * coeff * letters.


def _tmul(xs: list, ys: list) -> list:
    return [(a1 + a2, c1 * c2, l1 + l2) for a1, c1, l1 in xs for a2, c2, l2 in ys]


def _tneg(xs: list) -> list:
    return [(a, -c, l) for a, c, l in xs]


class _TemplateParser:
    def __init__(self, ts: TokenStream, masters: tuple[str, ...] | None):
        self.ts = ts
        self.masters = masters

    def sum(self) -> list:
        ts = self.ts
        neg = ts.accept("-")
        if not neg:
            ts.accept("+")
        out = self.product()
        if neg:
            out = _tneg(out)
        while ts.at("+") or ts.at("-"):
            op = ts.next().text
            t = self.product()
            out += t if op == "+" else _tneg(t)
        return out

    def product(self) -> list:
        out = self.power()
        while self.ts.accept("*"):
            out = _tmul(out, self.power())
        return out

    def power(self) -> list:
        ts = self.ts
        tok = ts.peek()
        if tok.kind == "name" and tok.text == "q" and ts.peek(1).text == "^":
            ts.next()
            ts.next()
            a, b = self.q_exponent()
            return [(a, QPoly.q_power(b), ())]
        base = self.atom()
        if not ts.accept("^"):
            return base
        if ts.accept("("):
            k = ts.signed_int()
            ts.expect(")")
        else:
            k = ts.signed_int()
        if k >= 0:
            out = [(0, QPoly(1), ())]
            for _ in range(k):
                out = _tmul(out, base)
            return out
        if len(base) != 1:
            ts.fail("negative power of a sum", tok)
        a, c, letters = base[0]
        try:
            c = c.invert_monomial() ** (-k)
        except NotInvertible:
            ts.fail(f"cannot invert {c}", tok)
        inv = tuple(LetterTemplate(l.master, l.index, -l.sign) for l in reversed(letters))
        return [(-a * -k, c, inv * -k)]

    def q_exponent(self) -> tuple[int, int]:
        """Parse the exponent after ``q^``: an integer, ``j`` or ``(a*j+b)``."""
        ts = self.ts
        if ts.accept("("):
            a, b = self.linear_in_j()
            ts.expect(")")
            return a, b
        if ts.accept("j"):
            return 1, 0
        return 0, ts.signed_int()

    def linear_in_j(self) -> tuple[int, int]:
        ts = self.ts
        a = b = 0
        first = True
        while True:
            if first:
                sign = -1 if ts.accept("-") else 1
                if sign == 1:
                    ts.accept("+")
            elif ts.at("+") or ts.at("-"):
                sign = 1 if ts.next().text == "+" else -1
            else:
                break
            first = False
            tok = ts.peek()
            if tok.kind == "int":
                n = int(ts.next().text)
                if ts.accept("*"):
                    ts.expect("j")
                    a += sign * n
                else:
                    b += sign * n
            elif ts.accept("j"):
                a += sign
            else:
                ts.fail("expected an integer or j in exponent", tok)
        return a, b

    def atom(self) -> list:
        ts = self.ts
        tok = ts.peek()
        if tok.kind == "int":
            ts.next()
            return [(0, QPoly(int(tok.text)), ())]
        if tok.kind == "name":
            ts.next()
            if ts.accept("["):
                index = self.index()
                ts.expect("]")
                if self.masters is not None and tok.text not in self.masters:
                    raise SemanticError(
                        f"unknown master {tok.text!r} at line {tok.line}, column {tok.column}"
                    )
                return [(0, QPoly(1), (LetterTemplate(tok.text, index),))]
            if tok.text == "j":
                ts.fail("j may only appear in indices and q exponents", tok)
            if tok.text not in alphabet():
                raise SemanticError(
                    f"unknown identifier {tok.text!r} at line {tok.line}, column {tok.column}"
                )
            return [(0, QPoly.var(tok.text), ())]
        if ts.accept("("):
            out = self.sum()
            ts.expect(")")
            return out
        ts.fail(f"unexpected {tok.text or 'end of input'!r}", tok)

    def index(self) -> IndexExpr:
        ts = self.ts
        tok = ts.peek()
        if tok.kind == "int":
            return IndexExpr(int(ts.next().text), relative=False)
        if ts.accept("j"):
            if ts.at("+") or ts.at("-"):
                sign = 1 if ts.next().text == "+" else -1
                n = ts.peek()
                if n.kind != "int":
                    raise SemanticError(
                        f"malformed index at line {n.line}, column {n.column}: "
                        "expected j+c, j-c or an integer"
                    )
                offset = sign * int(ts.next().text)
                if offset < 0:
                    raise SemanticError(
                        f"index j{offset} at line {n.line}, column {n.column} "
                        "is negative when j = 0"
                    )
                return IndexExpr(offset)
            return IndexExpr(0)
        raise SemanticError(
            f"malformed index at line {tok.line}, column {tok.column}: "
            "expected j+c, j-c or an integer"
        )


def _letters_key(letters):
    return (len(letters), tuple((l.master, not l.index.relative, l.index.offset, l.sign) for l in letters))


def make_rule(master: str, terms: list) -> RuleTemplate:
    """Normalize template terms into a canonical :class:`RuleTemplate`."""
    merged: dict = {}
    for a, c, letters in terms:
        key = (a, letters)
        merged[key] = merged.get(key, QPoly()) + c
    merged = {k: c for k, c in merged.items() if c}
    if not merged:
        return RuleTemplate(master, 0, 0, QPoly(1), ())
    rates = {a for a, _ in merged}
    if len(rates) != 1:
        raise SemanticError(
            f"rule for {master!r}: every term must carry the same power q^(a*j)"
        )
    (a,) = rates
    b = min(dict(m).get("q", 0) for c in merged.values() for m, _ in c.raw_items())
    shift = QPoly.q_power(-b)
    weights = {letters: c * shift for (_, letters), c in merged.items()}
    distinct = set(weights.values())
    if len(distinct) == 1:
        (c0,) = distinct
        weights = {k: QPoly(1) for k in weights}
    else:
        c0 = QPoly(1)
    words = tuple(
        (weights[k], k) for k in sorted(weights, key=_letters_key)
    )
    return RuleTemplate(master, a, b, c0, words)


def parse_rule_rhs(text: str, master: str, masters: tuple[str, ...]) -> RuleTemplate:
    ts = TokenStream(text)
    terms = _TemplateParser(ts, masters).sum()
    if ts.peek().kind != "end":
        ts.fail(f"unexpected {ts.peek().text!r}")
    return make_rule(master, terms)


# -- grammar files --------------------------------------------------------------


def parse_grammar_file(text: str) -> GrammarFile:
    ts = TokenStream(text)
    name = None
    masters: tuple[str, ...] | None = None
    order = None
    rules: dict = {}
    evals: dict = {}
    seed_tokens = None
    seen = set()

    while ts.peek().kind != "end":
        tok = ts.expect_kind("name", "a clause keyword")
        kw = tok.text
        if kw not in KEYWORDS:
            ts.fail(f"unknown clause {kw!r}; expected one of {', '.join(KEYWORDS)}", tok)
        if kw in ("grammar", "masters", "order", "seed"):
            if kw in seen:
                raise SemanticError(f"duplicate {kw} clause at line {tok.line}")
            seen.add(kw)
        if kw in ("rule", "eval", "seed") and masters is None:
            raise SemanticError(f"{kw} clause before masters clause at line {tok.line}")
        if kw == "grammar":
            name = ts.expect_kind("name", "a grammar name").text
        elif kw == "masters":
            names = [ts.expect_kind("name", "a master name").text]
            while ts.accept(","):
                names.append(ts.expect_kind("name", "a master name").text)
            if len(set(names)) != len(names):
                raise SemanticError(f"duplicate master at line {tok.line}")
            masters = tuple(names)
        elif kw == "order":
            o = ts.expect_kind("name", "an order").text
            try:
                order = Order(o)
            except ValueError:
                raise SemanticError(
                    f"unknown order {o!r} at line {tok.line}; expected KSO, LPO, AIO or DIO"
                ) from None
        elif kw in ("rule", "eval"):
            m, lhs = _parse_lhs(ts, masters)
            ts.expect("->")
            terms = _TemplateParser(ts, masters if kw == "rule" else ()).sum()
            target = rules if kw == "rule" else evals
            if m in target:
                raise SemanticError(f"duplicate {kw} for master {m!r} at line {lhs.line}")
            target[m] = (terms, lhs)
        else:  # seed
            start = ts.i
            seed_expr = parse_expr_sum(ts)
            seed_tokens = (seed_expr, ts.tokens[start])
        ts.expect(";")

    if masters is None:
        raise SemanticError("missing masters clause")
    for m in masters:
        if m not in rules:
            raise SemanticError(f"no rule for master {m!r}")
    grammar = Grammar(
        name or "G",
        masters,
        tuple(make_rule(m, rules[m][0]) for m in masters),
        order or Order.KSO,
    )

    evalmap = None
    if evals:
        images = []
        for m in masters:
            if m not in evals:
                raise SemanticError(f"eval clauses given but none for master {m!r}")
            terms, lhs = evals[m]
            images.append((m,) + _eval_image(m, terms, lhs))
        evalmap = EvalMap(tuple(images))

    seed = None
    if seed_tokens is not None:
        seed, tok = seed_tokens
        unknown = seed.masters() - set(masters)
        if unknown:
            raise SemanticError(
                f"seed mentions unknown master {sorted(unknown)[0]!r} at line {tok.line}"
            )
    return GrammarFile(grammar, evalmap, seed)


def parse_grammar(text: str) -> tuple[Grammar, EvalMap | None, Expr | None]:
    return tuple(parse_grammar_file(text))


def _parse_lhs(ts: TokenStream, masters):
    tok = ts.expect_kind("name", "a master")
    if tok.text not in masters:
        raise SemanticError(
            f"unknown master {tok.text!r} at line {tok.line}, column {tok.column}"
        )
    ts.expect("[")
    j = ts.peek()
    if not ts.accept("j"):
        raise SemanticError(
            f"malformed index at line {j.line}, column {j.column}: left side must be {tok.text}[j]"
        )
    ts.expect("]")
    return tok.text, tok


def _eval_image(master: str, terms: list, lhs) -> tuple[QPoly, int]:
    where = f"line {lhs.line}, column {lhs.column}"
    merged: dict = {}
    for a, c, letters in terms:
        merged[a] = merged.get(a, QPoly()) + c
    merged = {a: c for a, c in merged.items() if c}
    if len(merged) != 1:
        raise SemanticError(f"eval image of {master!r} is not a monomial ({where})")
    ((a, c),) = merged.items()
    if not c.is_unit_monomial():
        raise SemanticError(
            f"eval image of {master!r} must be a signed monomial, got {c} ({where})"
        )
    return c, a


# -- printing ---------------------------------------------------------------------


def _format_letter(l: LetterTemplate) -> str:
    return f"{l.master}[{l.index}]" + ("^-1" if l.sign < 0 else "")


def _format_q(a: int, b: int) -> str:
    if a == 0:
        return "" if b == 0 else f"q^{b}"
    lin = "j" if a == 1 else ("-j" if a == -1 else f"{a}*j")
    if b:
        lin += f"{b:+d}"
    return "q^j" if lin == "j" else f"q^({lin})"


def _format_weighted(weight: QPoly, letters) -> str:
    body = " * ".join(_format_letter(l) for l in letters)
    if not body:
        return weight.to_text()
    if weight == 1:
        return body
    if weight == -1:
        return "-" + body
    if weight.is_monomial():
        return f"{weight.to_text()} * {body}"
    return f"({weight.to_text()}) * {body}"


def format_rule(r: RuleTemplate) -> str:
    factors = []
    qpart = _format_q(r.a, r.b)
    if qpart:
        factors.append(qpart)
    if r.c0 != 1:
        c0 = r.c0.to_text()
        factors.append(f"({c0})" if r.c0.needs_parens() or c0.startswith("-") else c0)
    if not r.words:
        return "0"
    parts = [_format_weighted(w, letters) for w, letters in r.words]
    if len(parts) == 1:
        single = parts[0]
        if single != "1" or not factors:
            if single.startswith("-") and factors:
                factors.append("(" + single + ")")
            else:
                factors.append(single)
    else:
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        factors.append("(" + s + ")")
    return " * ".join(factors)


def format_grammar(g: Grammar, evalmap: EvalMap | None = None, seed: Expr | None = None) -> str:
    lines = [
        f"grammar {g.name};",
        "masters " + ", ".join(g.masters) + ";",
        f"order {g.order.value};",
    ]
    for r in g.rules:
        lines.append(f"rule {r.master}[j] -> {format_rule(r)};")
    if evalmap is not None:
        for m, base, c in evalmap.images:
            img = base.to_text()
            qpart = _format_q(c, 0)
            if qpart:
                img = qpart if base == 1 else f"{img} * {qpart}"
            lines.append(f"eval {m}[j] -> {img};")
    if seed is not None:
        lines.append(f"seed {seed.to_text()};")
    return "\n".join(lines) + "\n"
