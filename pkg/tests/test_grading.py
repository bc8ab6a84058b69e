import pytest
from hypothesis import given, settings

from qhaar.algebra import AlgElement, det_reduce, element_from_words, generator, monomial_element
from qhaar.grading import (
    BiDegree,
    bidegree,
    decompose,
    is_bi_invariant,
    project_00,
    tensor_project_left,
    tensor_project_right,
)
from qhaar.hopf import antipode, coproduct, star, tensor
from qhaar.qcoeff import Q

from strategies import elements, monomials, words


def bd(alpha, beta):
    return BiDegree(tuple(alpha), tuple(beta))


def test_bidegree_examples():
    assert bidegree((0,), 2) == bd([1], [1])
    assert bidegree((1,), 2) == bd([1], [-1])
    assert bidegree((2,), 2) == bd([-1], [1])
    assert bidegree((8,), 3) == bd([-1, -1], [-1, -1])
    assert str(bidegree((1,), 2)) == "[1, -1]"
    assert bidegree((1,), 2).to_json() == [[1], [-1]]


def test_decompose_examples(sl2):
    a, b, c, d = sl2
    assert decompose(a + b) == {bd([1], [1]): a, bd([1], [-1]): b}
    one = AlgElement.scalar(2, 1)
    assert decompose(one) == {bd([0], [0]): one}
    assert decompose(a * d) == {bd([0], [0]): one + (b * c).scale(Q)}


def test_project_00_examples(sl2):
    a, b, c, d = sl2
    one = AlgElement.scalar(2, 1)
    assert project_00(a).is_zero()
    assert project_00(one + a + (b * c).scale(Q)) == one + (b * c).scale(Q)


def test_tensor_projections(sl2):
    a, b, c, d = sl2
    one = AlgElement.scalar(2, 1)
    assert tensor_project_right(tensor(a, a) + tensor(b, c)).is_zero()
    t = tensor(a * d, b * c)
    assert tensor_project_right(t) == t
    assert tensor_project_left(t) == t
    assert tensor_project_right(tensor(one, one)) == tensor(one, one)
    assert tensor_project_left(tensor(a, b * c)).is_zero()


def test_bi_invariant_counts():
    assert is_bi_invariant((), 3)
    assert is_bi_invariant((0, 4, 8), 3)
    assert is_bi_invariant((1, 5, 6), 3)
    assert not is_bi_invariant((0, 4), 3)


@pytest.mark.parametrize("n", [2, 3])
def test_additivity(n):
    @settings(max_examples=50, deadline=None)
    @given(words(n, 4), words(n, 4))
    def check(w1, w2):
        assert bidegree(w1 + w2, n) == bidegree(w1, n) + bidegree(w2, n)
        # the normal form of the product stays in the same graded piece
        for w in element_from_words(n, {w1 + w2: 1}).terms:
            assert bidegree(w, n) == bidegree(w1, n) + bidegree(w2, n)

    check()


@pytest.mark.parametrize("n", [2, 3])
def test_star_and_antipode_grades(n):
    @settings(max_examples=25, deadline=None)
    @given(monomials(n, 3))
    def check(x):
        keys = set(decompose(x))
        assert set(decompose(star(x))) == {-k for k in keys}
        assert set(decompose(antipode(x))) == {-(k.swap()) for k in keys}

    check()


@settings(max_examples=30, deadline=None)
@given(elements(3, max_len=3))
def test_decompose_reconstructs(x):
    parts = decompose(x)
    total = AlgElement(3)
    for p in parts.values():
        total = total + p
    assert total == x
    assert project_00(project_00(x)) == project_00(x)


@settings(max_examples=30, deadline=None)
@given(words(3, 4))
def test_coproduct_respects_grading(w):
    x = element_from_words(3, {w: 1})
    for (l, r) in coproduct(x).terms:
        gl, gr = bidegree(l, 3), bidegree(r, 3)
        assert gl.beta == gr.alpha
        assert any(gl.alpha == g.alpha and gr.beta == g.beta for g in decompose(x))


def test_det_reduce_preserves_grade():
    x = monomial_element(3, (0, 1, 4, 8), reduce=False)
    g = bidegree((0, 1, 4, 8), 3)
    for w in det_reduce(x).terms:
        assert bidegree(w, 3) == g


def test_fundamental_grades_for_sl2():
    # u_ij has bidegree (-2 i0, -2 j0) in t-indexing with i0 = i - 3/2
    for i in (1, 2):
        for j in (1, 2):
            g = bidegree(generator(2, i, j).sorted_terms()[0][0], 2)
            assert g == bd([-(2 * i - 3)], [-(2 * j - 3)])
