"""Cycle Roselle polynomials: the labels of a permutation are a word of D^n(e[0]).

Run: python3 demos/03_roselle.py
"""

from itertools import permutations

from qgram.catalog import get_entry
from qgram.evalmap import evaluate
from qgram.freealg import Expr
from qgram.grammar import derive_n
from qgram.oracle import perm_stats, psi_cycle_map, roselle_blocks, roselle_labeling, roselle_poly
from qgram.qpoly import QPoly

cyc = get_entry("G_cyc")

sigma = (5, 2, 7, 1, 4, 6, 3, 9, 10, 8)
tau = psi_cycle_map(sigma)
print("sigma:", sigma)
print("tau = psi(sigma):", tau)
print("blocks:", roselle_blocks(tau))
print("stats:", perm_stats(tau))

p = (5, 4, 1, 2, 7, 3, 6, 9, 8)
print("\nlabels of", p, "->", Expr.word(roselle_labeling(p)))

# summing q^inv beta^rlmin times the labels over S_n gives D^n(e0)
for n in range(1, 6):
    total = Expr.zero()
    for s in permutations(range(1, n + 1)):
        st = perm_stats(s)
        total = total + Expr.word(roselle_labeling(s), QPoly.monomial(1, {"q": st.inv, "beta": st.rlmin}))
    d = derive_n(cyc.grammar, cyc.seed, n)
    same_value = evaluate(cyc.evalmap, d) == QPoly.var("e") * roselle_poly(n)
    print(f"n={n}: {d.omega():4d} words, labels sum to D^n: {total == d}, value matches: {same_value}")
