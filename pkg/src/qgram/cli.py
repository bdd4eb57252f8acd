"""Command line entry point ``qgram``.

Exit status is 0 on success, 1 when a verification check fails and 2 for usage
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .catalog import CATALOG_IDS, get_entry
from .dsl import format_grammar, parse_grammar_file
from .errors import QGramError
from .evalmap import EvalMap, evaluate
from .freealg import Expr
from .grammar import Grammar, iterates
from .qseries import STD_SERIES, gen, std_series
from .serialize import to_data, to_json

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

ORACLE_FAMILIES = (
    "eulerian-maj",
    "eulerian-inv",
    "roselle",
    "andre-tree-I",
    "andre-tree-II",
    "andre-perm-I",
    "andre-perm-II",
    "motzkin",
    "fibonacci",
    "euler",
)


class UsageError(Exception):
    pass


def _source(args) -> tuple[Grammar, EvalMap | None, Expr]:
    if args.catalog and args.file:
        raise UsageError("give either --catalog or --file, not both")
    if args.catalog:
        e = get_entry(args.catalog)
        g, m, seed = e.grammar, e.evalmap, e.seed
    elif args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from None
        g, m, seed = parse_grammar_file(text)
    else:
        raise UsageError("a grammar is required: use --catalog <id> or --file <path>")
    if args.seed is not None:
        seed = Expr.parse(args.seed)
        unknown = seed.masters() - set(g.masters)
        if unknown:
            raise UsageError(f"seed mentions masters {sorted(unknown)} not in {g.name}")
    if seed is None:
        raise UsageError("no seed: add a seed clause to the file or pass --seed")
    return g, m, seed


def _need_eval(m: EvalMap | None) -> EvalMap:
    if m is None:
        raise UsageError("this grammar has no eval clauses")
    return m


def _emit(args, value, text: str) -> None:
    print(to_json(value) if args.json else text)


def cmd_derive(args) -> int:
    g, _, seed = _source(args)
    its = iterates(g, seed, args.steps)
    if args.all:
        if args.json:
            print(json.dumps([to_data(a) for a in its], sort_keys=True, separators=(",", ":"), ensure_ascii=False))
        else:
            for n, a in enumerate(its):
                print(f"D^{n}: {a.to_text()}")
        return EXIT_OK
    _emit(args, its[-1], its[-1].to_text())
    return EXIT_OK


def cmd_count(args) -> int:
    g, _, seed = _source(args)
    counts = [a.omega() for a in iterates(g, seed, args.steps)[1:]]
    print(json.dumps(counts) if args.json else " ".join(map(str, counts)))
    return EXIT_OK


def cmd_eval(args) -> int:
    g, m, seed = _source(args)
    m = _need_eval(m)
    its = iterates(g, seed, args.steps)
    value = evaluate(m, its[-1])
    _emit(args, value, value.to_text())
    return EXIT_OK


def cmd_series(args) -> int:
    if args.std:
        if args.catalog or args.file:
            raise UsageError("--std cannot be combined with a grammar")
        s = std_series(args.std, args.order)
    else:
        g, m, seed = _source(args)
        s = gen(g, _need_eval(m), seed, args.order)
    _emit(args, s, s.to_text())
    return EXIT_OK


def cmd_oracle(args) -> int:
    from . import oracle

    n = args.steps
    fam = args.family
    if fam in ("motzkin", "fibonacci", "euler"):
        value = oracle.sequences(fam, n)
        print(json.dumps(value) if args.json else value)
        return EXIT_OK
    if fam.startswith("eulerian-"):
        p = oracle.eulerian_poly(n, fam.split("-")[1])
    elif fam == "roselle":
        p = oracle.roselle_poly(n)
    elif fam.startswith("andre-tree-"):
        p = oracle.andre_tree_poly(n, fam.rsplit("-", 1)[1])
    else:
        p = oracle.andre_perm_poly(n, fam.rsplit("-", 1)[1])
    _emit(args, p, p.to_text())
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import SUITE_NAMES, VerifyOptions, run

    for name in args.suites:
        if name not in SUITE_NAMES:
            raise UsageError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    if args.cases < 1:
        raise UsageError("--cases must be positive")
    checks = run(args.suites, VerifyOptions(order=args.order, seed=args.rng_seed, cases=args.cases))
    failed = [c for c in checks if not c.passed]
    if args.json:
        print(json.dumps([c.__dict__ for c in checks], sort_keys=True, indent=1))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)} passed, {len(failed)} failed")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        if args.ids:
            for id in CATALOG_IDS:
                e = get_entry(id)
                law = e.law_text or "no closed form"
                print(f"{id}\t{e.grammar.order.value}\tseed {e.seed.to_text()}\t{law}")
            return EXIT_OK
        if args.json:
            print(json.dumps([to_data(get_entry(i).grammar) for i in CATALOG_IDS], sort_keys=True, separators=(",", ":"), ensure_ascii=False))
            return EXIT_OK
        print("\n".join(format_grammar(e.grammar, e.evalmap, e.seed) for e in map(get_entry, CATALOG_IDS)), end="")
        return EXIT_OK
    if not args.id:
        raise UsageError("catalog show needs an id")
    e = get_entry(args.id)
    _emit(args, e.grammar, format_grammar(e.grammar, e.evalmap, e.seed).rstrip("\n"))
    return EXIT_OK


def _grammar_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--catalog", metavar="ID", help="built-in grammar id (see `qgram catalog list --ids`)")
    p.add_argument("--file", metavar="PATH", help="grammar file in the qgram text format")
    p.add_argument("--seed", metavar="EXPR", help="start expression, e.g. 'x[0]*y[0]^-1'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgram", description="Derivations with q-derivative grammars.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="print D^n(seed)")
    _grammar_flags(p)
    p.add_argument("-n", "--steps", type=int, default=1)
    p.add_argument("--all", action="store_true", help="print every step from D^0")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("count", help="print the number of terms of D^1..D^n(seed)")
    _grammar_flags(p)
    p.add_argument("-n", "--steps", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("eval", help="print the evaluation of D^n(seed)")
    _grammar_flags(p)
    p.add_argument("-n", "--steps", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("series", help="print Eulerian series coefficients a_0..a_N")
    _grammar_flags(p)
    p.add_argument("--std", choices=STD_SERIES, help="a standard q-series instead of a grammar")
    p.add_argument("-N", "--order", type=int, default=8)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("oracle", help="brute-force reference polynomials and sequences")
    p.add_argument("family", choices=ORACLE_FAMILIES)
    p.add_argument("-n", "--steps", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="+", metavar="SUITE")
    p.add_argument("-N", "--order", type=int, default=None, help="size or truncation bound")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("catalog", help="list or show built-in grammars")
    p.add_argument("action", choices=("list", "show"))
    p.add_argument("id", nargs="?")
    p.add_argument("--ids", action="store_true", help="list ids only")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("steps", "order"):
        v = getattr(args, name, None)
        if v is not None and v < 0:
            parser.error(f"--{name} must be non-negative")
    try:
        return args.func(args)
    except (UsageError, QGramError, ValueError, KeyError, SyntaxError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"qgram: error: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
