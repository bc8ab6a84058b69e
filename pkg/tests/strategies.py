"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from qhaar.algebra import AlgElement, element_from_words
from qhaar.qcoeff import qpow


def words(n, max_len=4, min_len=0):
    return st.lists(st.integers(0, n * n - 1), min_size=min_len, max_size=max_len).map(tuple)


def monomials(n, max_len=4, min_len=0):
    """Normal form of a random product of generators (may have several terms)."""
    return words(n, max_len, min_len).map(lambda w: element_from_words(n, {w: 1}))


small_coeffs = st.builds(lambda k, c: qpow(k, c), st.integers(-2, 2), st.integers(-3, 3).filter(bool))


@st.composite
def elements(draw, n, max_len=3, max_terms=3):
    terms = draw(st.dictionaries(words(n, max_len), small_coeffs, min_size=1, max_size=max_terms))
    return element_from_words(n, terms)


def nonzero(strategy):
    return strategy.filter(lambda x: isinstance(x, AlgElement) and not x.is_zero())
