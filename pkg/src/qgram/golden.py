"""Expansions displayed in the source text, kept as parseable expression strings."""

from __future__ import annotations

from .freealg import Expr

__all__ = ["EXPANSIONS", "ORDER_EXAMPLE", "ORDER_RESULTS", "F_TABLES", "ANDRE_LISTS", "expansion"]

# (catalog id, seed, n) -> D^n(seed), written as displayed
EXPANSIONS: dict[tuple[str, str, int], str] = {
    ("G_tan", "x[0]", 1): "1 + x[1]*x[0]",
    ("G_tan", "x[0]", 2): "(1+q)*x[1] + x[1]*x[1]*x[0] + q*x[2]*x[1]*x[1]",
    ("G_tan'", "x[0]", 1): "1 + x[0]*x[1]",
    ("G_tan'", "x[0]", 2): "q*x[0] + x[2] + (1+q)*x[0]*x[1]*x[2]",
    ("G_tan∪sec", "x[0]", 0): "x[0]",
    ("G_tan∪sec", "x[0]", 1): "1 + x[1]*x[0]",
    ("G_tan∪sec", "x[0]", 2): "(1+q)*x[1] + x[1]^2*x[0] + q*x[2]*x[1]^2",
    ("G_tan∪sec", "x[0]", 3): (
        "(q+q^2) + (1+q)*x[1]^2 + x[1]^3*x[0] + (q^2+q^3)*x[2]^2"
        " + (q+q^2)*x[2]^2*x[1]^2 + q*x[2]*x[1]^3 + (2*q^2+2*q)*x[2]*x[1]"
        " + q^2*x[2]^3*x[1] + q^3*x[3]*x[2]^3"
    ),
    ("G_tan∪sec", "y[0]", 0): "y[0]",
    ("G_tan∪sec", "y[0]", 1): "y[1]*x[0]",
    ("G_tan∪sec", "y[0]", 2): "q*y[2]*x[1]^2 + y[1] + x[1]*y[1]*x[0]",
    ("G_tan∪sec", "y[0]", 3): (
        "q^3*y[3]*x[2]^3 + q^2*x[2]*y[2] + q^2*x[2]^2*y[2]*x[1] + (q^2+2*q)*y[2]*x[1]"
        " + (q^2+q)*x[2]*y[2]*x[1]^2 + q*y[2]*x[1]^3 + x[1]*y[1] + x[1]^2*y[1]*x[0]"
    ),
}

ORDER_EXAMPLE = "x[2]*y[2]^-1*x[1]*x[3]^2*y[3] + (1+q)*y[1]^2*x[1]^-1*x[2]"

ORDER_RESULTS = {
    "KSO": ORDER_EXAMPLE,
    "LPO": "x[1]*x[2]*x[3]^2*y[2]^-1*y[3] + (1+q)*x[1]^-1*x[2]*y[1]^2",
    "AIO": "x[1]*x[2]*y[2]^-1*x[3]^2*y[3] + (1+q)*x[1]^-1*y[1]^2*x[2]",
    "DIO": "x[3]^2*y[3]*x[2]*y[2]^-1*x[1] + (1+q)*x[2]*x[1]^-1*y[1]^2",
}


def expansion(id: str, seed: str, n: int) -> Expr:
    return Expr.parse(EXPANSIONS[(id, seed, n)])


# F^I_n and F^II_n as printed, in t and q
F_TABLES: dict[tuple[str, int], str] = {
    ("I", 1): "t",
    ("I", 2): "t",
    ("I", 3): "t + q*t^2",
    ("I", 4): "t + (2*q + 2*q^2)*t^2",
    ("I", 5): "t + (3*q+4*q^2+3*q^3+q^4)*t^2 + (q^2+q^3+2*q^4)*t^3",
    ("II", 1): "t",
    ("II", 2): "t",
    ("II", 3): "t + q^2*t^2",
    ("II", 4): "t + (2*q^2+q^3+q^4)*t^2",
    ("II", 5): "t + (2*q^6+q^5+3*q^4+2*q^3+3*q^2)*t^2 + (q^8+q^6+q^5+q^4)*t^3",
}

# André permutations listed for n = 4
ANDRE_LISTS: dict[str, tuple[str, ...]] = {
    "I": ("1234", "1324", "2314", "2134", "3124"),
    "II": ("1234", "1423", "3412", "4123", "3124"),
}
