"""Eulerian polynomials from grammars, checked against permutations.

Run: python3 demos/02_eulerian.py
"""

from qgram.catalog import get_entry
from qgram.evalmap import evaluate
from qgram.grammar import iterates
from qgram.oracle import eulerian_poly, perm_stats
from qgram.qpoly import QPoly
from qgram.qseries import gen, series_mul, std_series

maj, inv = get_entry("G_maj"), get_entry("G_inv")

for n, (a, b) in enumerate(zip(iterates(maj.grammar, maj.seed, 5), iterates(inv.grammar, inv.seed, 5))):
    if n == 0:
        continue
    pa, pb = evaluate(maj.evalmap, a), evaluate(inv.evalmap, b)
    print(f"n={n}  maj: {pa}")
    print(f"     inv: {pb}")
    assert pa == eulerian_poly(n, "maj") and pb == eulerian_poly(n, "inv")

print("\nstatistics of 3 1 4 2:", perm_stats((3, 1, 4, 2)))

# generating function: gen(x0) * (x - y e_q((x-y)u)) = x(x-y) after clearing
N = 6
x, y = QPoly.var("x"), QPoly.var("y")
g = gen(inv.grammar, inv.evalmap, inv.seed, N)
den = std_series("e_q", N, x - y) * (-y) + x * std_series("e_q", N, 0)
print("\ncleared Stanley identity holds:", series_mul(g, den) == std_series("e_q", N, 0) * (x * (x - y)))
