"""Grammar files, canonical JSON and the verification suites.

Run: python3 demos/06_files_and_json.py
"""

from pathlib import Path

from qgram.dsl import format_grammar, parse_grammar
from qgram.grammar import derive_n
from qgram.serialize import from_json, to_json
from qgram.verify import VerifyOptions, run_suite

text = (Path(__file__).resolve().parent.parent / "grammars" / "andre2.qg").read_text()
g, m, seed = parse_grammar(text)
print(format_grammar(g, m, seed))

d3 = derive_n(g, seed, 3)
blob = to_json(d3)
print(blob[:120], "...")
print("round trip:", from_json(blob) == d3 and to_json(from_json(blob)) == blob)

for c in run_suite("orders", VerifyOptions()):
    print(c.line())
