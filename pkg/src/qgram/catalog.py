"""Built-in grammars with their evaluations, seeds and term-count laws."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .dsl import parse_grammar_file
from .errors import NoLawRecorded, UnknownId
from .evalmap import EvalMap
from .freealg import Expr
from .grammar import Grammar, derive_n
from .oracle.sequences import fibonacci, motzkin

__all__ = ["CatalogEntry", "CATALOG_IDS", "get_entry", "entries", "term_count", "law", "resolve_id"]

_TAN = "q^j * (1 + x[j] * x[j+1])"

_SOURCES = {
    "G_tan": f"""
        masters x; order DIO;
        rule x[j] -> {_TAN};
        eval x[j] -> x; seed x[0];""",
    "G_tan'": f"""
        masters x; order LPO;
        rule x[j] -> {_TAN};
        eval x[j] -> x; seed x[0];""",
    "G_sec": f"""
        masters x, y; order DIO;
        rule x[j] -> {_TAN};
        rule y[j] -> q^j * x[j] * y[j+1];
        eval x[j] -> x; eval y[j] -> y; seed y[0];""",
    "G_sec'": f"""
        masters x, y; order LPO;
        rule x[j] -> {_TAN};
        rule y[j] -> q^j * x[j] * y[j+1];
        eval x[j] -> x; eval y[j] -> y; seed y[0];""",
    "G_Sec": f"""
        masters x, y; order DIO;
        rule x[j] -> {_TAN};
        rule y[j] -> q^j * y[j] * x[j+1];
        eval x[j] -> x; eval y[j] -> y; seed y[0];""",
    "G_Sec'": f"""
        masters x, y; order LPO;
        rule x[j] -> {_TAN};
        rule y[j] -> q^j * y[j] * x[j+1];
        eval x[j] -> x; eval y[j] -> y; seed y[0];""",
    "G_tan∪sec": f"""
        masters x, y; order DIO;
        rule x[j] -> {_TAN};
        rule y[j] -> q^j * x[j] * y[j+1];
        eval x[j] -> x; eval y[j] -> y; seed x[0];""",
    "G_maj": """
        masters x, y; order LPO;
        rule x[j] -> q^j * x[0] * y[0];
        rule y[j] -> q^j * x[0] * y[0];
        eval x[j] -> x * q^j; eval y[j] -> y * q^j; seed x[0];""",
    "G_inv": """
        masters x, y; order AIO;
        rule x[j] -> q^j * y[j] * x[j+1];
        rule y[j] -> q^j * y[j] * x[j+1];
        eval x[j] -> x; eval y[j] -> y; seed x[0];""",
    "G_cyc": """
        masters x, y, z, e; order KSO;
        rule x[j] -> q^j * y[j] * x[j+1];
        rule y[j] -> q^j * y[j] * x[j+1];
        rule z[j] -> q^j * y[j] * x[j+1];
        rule e[j] -> q^j * beta * e[j] * z[j+1];
        eval x[j] -> x; eval y[j] -> y; eval z[j] -> z; eval e[j] -> e;
        seed e[0];""",
    "G_binv": """
        masters x, y; order KSO;
        rule x[j] -> q^j * x[j+1];
        rule y[j] -> q^j * y[j];
        eval x[j] -> x; eval y[j] -> y; seed x[0];""",
    "G_AndI": """
        masters x, y; order AIO;
        rule x[j] -> q^j * x[j] * y[j+1];
        rule y[j] -> q^j * x[j];
        eval x[j] -> x; eval y[j] -> y; seed x[0];""",
    "G_AndII": """
        masters x, y; order AIO;
        rule x[j] -> q^j * x[j] * y[j+1];
        rule y[j] -> q^(j+1) * x[j+1];
        eval x[j] -> x; eval y[j] -> y; seed x[0];""",
}

CATALOG_IDS = tuple(_SOURCES)

_ALIASES = {
    "G_tan2": "G_tan'",
    "G_sec2": "G_sec'",
    "G_Sec2": "G_Sec'",
    "G_tan_sec": "G_tan∪sec",
    "G_tanUsec": "G_tan∪sec",
    "G_tan+sec": "G_tan∪sec",
}

# Omega(D^n(seed)) for n = 1, 2, ...
_GOLDEN = {
    "G_tan": (2, 3, 9, 20, 38, 65, 101, 150, 210, 287, 377),
    "G_tan'": (2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233),
    "G_sec": (1, 3, 8, 19, 36, 63, 98, 147, 206, 283, 372),
    "G_sec'": (1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144),
    "G_Sec": (1, 3, 8, 23, 48, 86, 139, 210, 301, 415, 554),
    "G_Sec'": (1, 3, 8, 21, 53, 132, 325, 795, 1936, 4701, 11393),
    "G_tan∪sec": (2, 3, 9, 20, 38, 65, 101, 150, 210, 287, 377),
    "G_maj": (1, 2, 6, 20, 73, 283, 1147, 4814, 20774),
    "G_inv": (1, 2, 4, 8, 16, 32, 64, 128, 256, 512),
    "G_cyc": (1, 2, 5, 12, 28, 65, 151, 351, 816, 1897),
    "G_binv": (1,) * 11,
    "G_AndI": (1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798),
    "G_AndII": (1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144),
}


def _tan_law(n: int) -> int:
    k, r = divmod(n, 2)
    if r:
        return 2 * k**3 + 5 * k**2 + 2
    return (k + 2) * (2 * k**2 - 2 * k + 1)


def _sec_law(n: int) -> int:
    if n == 1:
        return 1
    k, r = divmod(n, 2)
    if r:
        return 2 * k**3 + 5 * k**2 - k + 2
    return 2 * k**3 + 2 * k**2 - 4 * k + 3


def _Sec_law(n: int) -> int:
    if n <= 2:
        return (1, 3)[n - 1]
    k, r = divmod(n, 2)
    if r:
        return (20 * k**3 + 33 * k**2 + k - 6) // 6
    return (20 * k - 17) * (k + 1) * k // 6


def _cyc_law(n: int) -> int:
    return sum(comb(n + k, 3 * k) for k in range((n + 1) // 2 + 1))


_LAWS: dict[str, tuple[str, Callable[[int], int]]] = {
    "G_tan": ("2k^3+5k^2+2 (n=2k+1), (k+2)(2k^2-2k+1) (n=2k)", _tan_law),
    "G_tan∪sec": ("2k^3+5k^2+2 (n=2k+1), (k+2)(2k^2-2k+1) (n=2k)", _tan_law),
    "G_tan'": ("F(n+2)", lambda n: fibonacci(n + 2)),
    "G_sec": ("1 (n=1), 2k^3+5k^2-k+2 (n=2k+1), 2k^3+2k^2-4k+3 (n=2k)", _sec_law),
    "G_sec'": ("F(n+1)", lambda n: fibonacci(n + 1)),
    "G_Sec": ("1, 3, (20k^3+33k^2+k-6)/6 (n=2k+1), (20k-17)(k+1)k/6 (n=2k)", _Sec_law),
    "G_inv": ("2^(n-1)", lambda n: 2 ** (n - 1)),
    "G_cyc": ("sum_k C(n+k, 3k)", _cyc_law),
    "G_binv": ("1", lambda n: 1),
    "G_AndI": ("M(n)", motzkin),
    "G_AndII": ("F(n+1)", lambda n: fibonacci(n + 1)),
}


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    grammar: Grammar
    evalmap: EvalMap
    seed: Expr
    golden: tuple[int, ...]
    law_text: str | None
    source: str

    def law(self, n: int) -> int:
        return law(self.id, n)

    def term_count(self, n: int) -> int:
        return term_count(self.id, n)

    def derive(self, n: int) -> Expr:
        return derive_n(self.grammar, self.seed, n)


_ENTRIES: dict[str, CatalogEntry] = {}


def resolve_id(id: str) -> str:
    id = _ALIASES.get(id, id)
    if id not in _SOURCES:
        raise UnknownId(f"unknown catalog id {id!r}; known: {', '.join(CATALOG_IDS)}")
    return id


def get_entry(id: str) -> CatalogEntry:
    id = resolve_id(id)
    entry = _ENTRIES.get(id)
    if entry is None:
        source = f"grammar {id};" + _SOURCES[id]
        parsed = parse_grammar_file(source)
        entry = CatalogEntry(
            id=id,
            grammar=parsed.grammar,
            evalmap=parsed.evalmap,
            seed=parsed.seed,
            golden=_GOLDEN[id],
            law_text=_LAWS[id][0] if id in _LAWS else None,
            source=source,
        )
        _ENTRIES[id] = entry
    return entry


def entries() -> list[CatalogEntry]:
    return [get_entry(i) for i in CATALOG_IDS]


def law(id: str, n: int) -> int:
    """Closed-form term count; raises NoLawRecorded when none is known."""
    id = resolve_id(id)
    if n < 1:
        raise ValueError("term counts are indexed from n = 1")
    if id not in _LAWS:
        raise NoLawRecorded(f"no closed form recorded for {id}")
    return _LAWS[id][1](n)


def term_count(id: str, n: int) -> int:
    """Predicted number of terms of ``D^n(seed)``.

    Uses the closed form when one exists, else the recorded initial values.
    """
    id = resolve_id(id)
    if id in _LAWS:
        return law(id, n)
    golden = _GOLDEN[id]
    if 1 <= n <= len(golden):
        return golden[n - 1]
    raise NoLawRecorded(
        f"{id} has no closed form and only {len(golden)} recorded values"
    )
