"""q-derivative grammars over indexed non-commutative variables."""

__version__ = "0.1.0"
