"""André permutations and trees.

Run: python3 demos/04_andre.py
"""

from qgram.catalog import get_entry
from qgram.evalmap import evaluate
from qgram.grammar import iterates
from qgram.oracle import andre_perm_poly, andre_perms, andre_tree_poly, perm_stats, psi_tree, tree_inv, tree_leaf_deg1

for kind in ("I", "II"):
    print(f"kind {kind}, n=4:", ["".join(map(str, p)) for p in andre_perms(4, kind)])

t = psi_tree((3, 1, 2, 4))
print("\ntree of 3124:", t, " inv:", tree_inv(t), " (leaves, one-child):", tree_leaf_deg1(t))

for id, kind in (("G_AndI", "I"), ("G_AndII", "II")):
    e = get_entry(id)
    print(f"\n{id}")
    for n, a in enumerate(iterates(e.grammar, e.seed, 4)):
        v = evaluate(e.evalmap, a)
        assert v == andre_tree_poly(n + 1, kind)
        print(f"  n+1={n + 1}: {v}")
    print("  descent polynomial at n=5:", andre_perm_poly(5, kind))

p = (2, 3, 1, 4)
print("\n2314: des =", perm_stats(p).des, " inv =", perm_stats(p).inv)
