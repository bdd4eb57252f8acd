import hypothesis.strategies as st
from hypothesis import settings

from qgram.freealg import Letter
from qgram.qpoly import QPoly

settings.register_profile("qgram", deadline=None, max_examples=60)
settings.load_profile("qgram")

VARS = ("q", "x", "y")


@st.composite
def qpolys(draw, max_terms=4, lo=-2, hi=3):
    out = QPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(st.integers(-3, 3))
        exps = {v: draw(st.integers(lo, hi)) for v in VARS}
        out = out + QPoly.monomial(c, exps)
    return out


def letters(masters=("x", "y"), max_index=2):
    return st.builds(
        Letter,
        st.sampled_from(masters),
        st.integers(0, max_index),
        st.sampled_from((1, -1)),
    )
