"""Derivatives of a grammar, step by step.

Run: python3 demos/01_derivations.py
"""

from qgram.catalog import get_entry
from qgram.freealg import Expr
from qgram.grammar import apply_order, derive, derive_n, iterates

tan = get_entry("G_tan")
print(tan.source.strip(), "\n")

# D(x0), D^2(x0): every summand is put in descending interleaving order
for n, a in enumerate(iterates(tan.grammar, tan.seed, 3)):
    print(f"D^{n}(x[0]) = {a}")

# the same rule with the letter-priority order gives different words
tan2 = get_entry("G_tan'")
print("\nwith LPO:", derive_n(tan2.grammar, tan2.seed, 2))

# orders act on any expression
e = Expr.parse("x[2]*y[2]^-1*x[1]*x[3]^2*y[3] + (1+q)*y[1]^2*x[1]^-1*x[2]")
for order in ("KSO", "LPO", "AIO", "DIO"):
    print(f"{order}: {apply_order(order, e, ('x', 'y'))}")

# inverse letters follow D(s^-1) = -s^-1 R(s) s'^-1
inv = get_entry("G_inv").grammar
print("\nG_inv, D(y[0]^-1) =", derive(inv, Expr.parse("y[0]^-1")))
print("G_inv, D(x[0]*x[0]^-1) =", derive(inv, Expr.parse("x[0]*x[0]^-1")))

# number of terms
for id in ("G_tan", "G_inv", "G_AndI", "G_cyc"):
    e = get_entry(id)
    counts = [a.omega() for a in iterates(e.grammar, e.seed, 8)[1:]]
    print(f"{id:8s} terms: {counts}  law: {e.law_text}")
