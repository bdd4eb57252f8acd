"""Eulerian series and q-trigonometric functions.

Run: python3 demos/05_series.py
"""

from qgram.catalog import get_entry
from qgram.qpoly import QPoly
from qgram.qseries import ESeries, gen, qbinom, series_dq, series_subst_q, std_series

N = 6
print("[4 choose 2]_q =", qbinom(4, 2))

tan = std_series("tan_q", N)
print("\ntan_q coefficients:")
print(tan)

# D_q tan_q(u) = 1 + tan_q(u) tan_q(qu)
rhs = ESeries.constant(1, N) + tan * series_subst_q(tan, 1)
print("\nD_q tan = 1 + tan(u) tan(qu):", series_dq(tan) == rhs.truncate(N - 1))

# the grammar series of G_tan reduces to tan_q when x = 0
e = get_entry("G_tan")
g = gen(e.grammar, e.evalmap, e.seed, N)
at_zero = ESeries.of(c.subs({"x": 0}) for c in g.coeffs)
print("gen(G_tan, x0) at x=0 equals tan_q:", at_zero == tan)
print(g.truncate(3))

print("\ne_q(u) E_q(-u) = 1:", std_series("e_q", N) * std_series("E_q", N, -1) == ESeries.constant(1, N))
print("e_q((x-y)u) substituted u -> qu:", series_subst_q(std_series("e_q", 3, QPoly.parse("x-y")), 1).coeffs)
