import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhaar.algebra import (
    AlgElement,
    det_reduce,
    element_from_words,
    engine,
    generator,
    monomial_element,
    quantum_determinant,
    quantum_minor,
)
from qhaar.hopf import counit
from qhaar.qcoeff import ONE, Q, qpow

from strategies import elements, monomials, words


def test_generator_names(sl2):
    a, b, c, d = sl2
    assert str(a) == "a" and str(d) == "d"
    assert generator(2, 1, 1) == a
    assert generator(4, 1, 3).degree() == 1
    with pytest.raises(IndexError):
        generator(3, 4, 1)


def test_commutation_examples(sl2):
    a, b, c, d = sl2
    assert b * a == (a * b).scale(Q.inv())
    assert d * a == AlgElement.scalar(2, 1) + (b * c).scale(Q.inv())
    assert c * b == b * c
    assert a * d == AlgElement.scalar(2, 1) + (b * c).scale(Q)


def test_frt_relations(sl2):
    a, b, c, d = sl2
    assert a * b == (b * a).scale(Q)
    assert a * c == (c * a).scale(Q)
    assert b * d == (d * b).scale(Q)
    assert c * d == (d * c).scale(Q)
    assert a * d - d * a == (b * c).scale(Q - Q.inv())


def test_quantum_minor_examples(sl2):
    a, b, c, d = sl2
    raw = quantum_minor(2, {1, 2}, {1, 2}, reduce=False)
    assert raw == monomial_element(2, (0, 3), reduce=False) - monomial_element(2, (1, 2)).scale(Q)
    assert det_reduce(raw) == AlgElement.scalar(2, 1)
    assert quantum_minor(3, {1}, {2}) == generator(3, 1, 2)
    assert counit(quantum_determinant(3)) == ONE


def test_det_reduce_examples(sl2):
    a, b, c, d = sl2
    bc = monomial_element(2, (1, 2), reduce=False)
    assert det_reduce(bc) == bc
    ad = monomial_element(2, (0, 3), reduce=False)
    assert det_reduce(ad) == AlgElement.scalar(2, 1) + bc.scale(Q)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_determinant_is_one(n):
    assert quantum_determinant(n, reduce=True) == AlgElement.scalar(n, 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_determinant_central(n):
    dq = quantum_determinant(n, reduce=False)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            u = generator(n, i, j)
            assert u * dq == dq * u


def test_normal_words_are_sorted_and_irreducible():
    eng = engine(3)
    x = element_from_words(3, {(8, 4, 0, 1, 5): 1, (7, 2): qpow(2)})
    for w in x.terms:
        assert list(w) == sorted(w)
        assert not eng.is_reducible(w)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_confluence(n):
    @settings(max_examples=25 if n < 4 else 10, deadline=None)
    @given(monomials(n, 2), monomials(n, 2), monomials(n, 2 if n < 4 else 1))
    def check(x, y, z):
        assert (x * y) * z == x * (y * z)

    check()


@settings(max_examples=40, deadline=None)
@given(words(3, 5))
def test_degree_does_not_grow(w):
    x = element_from_words(3, {w: 1})
    assert x.degree() <= len(w)


@settings(max_examples=40, deadline=None)
@given(elements(2), elements(2))
def test_distributive(x, y):
    a = generator(2, 1, 1)
    assert a * (x + y) == a * x + a * y
    assert (x - y) + y == x


@settings(max_examples=40, deadline=None)
@given(elements(3))
def test_json_round_trip(x):
    assert AlgElement.from_json(x.to_json()) == x


def test_power_and_scale(sl2):
    a, b, c, d = sl2
    assert b**3 == b * b * b
    assert b**0 == AlgElement.scalar(2, 1)
    assert (b * 2 - b).scale(ONE) == b


def test_size_mismatch():
    with pytest.raises(ValueError):
        generator(2, 1, 1) * generator(3, 1, 1)
    with pytest.raises(ValueError):
        monomial_element(2, (3, 0))
    with pytest.raises(ValueError):
        AlgElement(1)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 3))
def test_degree_of_words(k):
    assert generator(2, 1, 2) ** k == element_from_words(2, {(1,) * k: 1})
