"""Acceptance criteria 1-12.

Each criterion prints one ``PASS``/``FAIL`` line (collected in the pytest
terminal summary, or printed directly when run as a script).
"""

import random
import time
from fractions import Fraction

import pytest

from qhaar.algebra import AlgElement, engine, generators, monomial_element
from qhaar.grading import bidegree, decompose, tensor_project_right
from qhaar.haar import (
    HaarCache,
    fundamental_norm_L,
    fundamental_norm_R,
    haar,
    haar_zeta_closed,
    inner_L,
    inner_R,
    ks_projection_expansion,
    zeta,
)
from qhaar.hopf import (
    antipode,
    apply_left,
    apply_right,
    coproduct,
    coproduct_iterated,
    counit,
    functional_left,
    functional_right,
    multiply_legs,
    star,
    theta,
)
from qhaar.expr import parse_element
from qhaar.qcoeff import ONE, ZERO, qint, qpow
from qhaar.verify import run_checks

RESULTS = []


def record(number, title, ok, seconds, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} [{seconds:.2f}s]"
    if detail:
        line += f"  {detail}"
    RESULTS.append(line)
    return ok


def timed(fn):
    t0 = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t0


def random_normal_word(rng, n, max_len, min_len=1):
    """A random basis word (sorted, not containing every diagonal letter)."""
    eng = engine(n)
    while True:
        k = rng.randint(min_len, max_len)
        w = tuple(sorted(rng.randrange(n * n) for _ in range(k)))
        if not eng.is_reducible(w):
            return w


def random_monomial(rng, n, max_len, min_len=1):
    return monomial_element(n, random_normal_word(rng, n, max_len, min_len))


# -- criteria ----------------------------------------------------------------


def c1():
    value = haar(parse_element("-q*b*c", 2), HaarCache(2))
    expected = (ONE - qpow(-2)) / (ONE - qpow(-4))
    return value == expected, f"h(zeta) = {value}"


def c2():
    cache = HaarCache(2)
    b = generators(2)[0][1]
    z = star(b) * b
    bad = [k for k in range(1, 6) if haar(z**k, cache) != haar_zeta_closed(k)]
    return not bad, f"mismatch at n = {bad}" if bad else "n = 1..5"


def c3():
    limits = {2: 60, 3: 60, 4: 600}
    spent = []
    for n, limit in limits.items():
        t0 = time.perf_counter()
        u = generators(n)
        cache = HaarCache(n)
        for i in range(n):
            for j in range(n):
                if inner_L(u[i][j], u[i][j], cache) != fundamental_norm_L(n, i + 1):
                    return False, f"N = {n}: <u{i + 1}{j + 1}, u{i + 1}{j + 1}>_L"
                if inner_R(u[i][j], u[i][j], cache) != fundamental_norm_R(n, j + 1):
                    return False, f"N = {n}: <u{i + 1}{j + 1}, u{i + 1}{j + 1}>_R"
        dt = time.perf_counter() - t0
        if dt >= limit:
            return False, f"N = {n} took {dt:.1f}s, limit {limit}s"
        spent.append(f"N={n} {dt:.2f}s")
    if fundamental_norm_L(4, 1) != qpow(3) / qint(4):
        return False, "q^3/[4] at N = 4"
    return True, ", ".join(spent)


def c4():
    for n in (2, 3):
        u = generators(n)
        cells = [(i, j) for i in range(n) for j in range(n)]
        for i, j in cells:
            for k, l in cells:
                if (i, j) != (k, l) and inner_L(u[i][j], u[k][l]) != ZERO:
                    return False, f"N = {n}: <u{i + 1}{j + 1}, u{k + 1}{l + 1}>_L != 0"
    return True, "N = 2, 3"


def c5():
    for n in (2, 3, 4):
        u = generators(n)
        one = AlgElement.scalar(n, 1)
        s1, s2 = AlgElement(n), AlgElement(n)
        for j in range(n):
            s1 = s1 + u[0][j] * star(u[0][j])
            s2 = s2 + (star(u[0][j]) * u[0][j]).scale(qpow(-2 * j))
        if s1 != one or s2 != one:
            return False, f"N = {n}"
    return True, "N = 2, 3, 4"


def _hopf_ok(x):
    t = coproduct(x)
    eps = AlgElement.scalar(x.n, counit(x))
    return (
        coproduct_iterated(x, "left") == coproduct_iterated(x, "right")
        and functional_left(t, counit) == x
        and functional_right(t, counit) == x
        and multiply_legs(apply_left(t, antipode)) == eps
        and multiply_legs(apply_right(t, antipode)) == eps
    )


def c6():
    for n in (2, 3, 4):
        for row in generators(n):
            for u in row:
                if not _hopf_ok(u):
                    return False, f"generator at N = {n}"
    rng = random.Random(6)
    for k in range(20):
        x = AlgElement(2)
        for _ in range(rng.randint(1, 3)):
            x = x + random_monomial(rng, 2, 3, 0).scale(qpow(rng.randint(-2, 2), rng.randint(1, 3)))
        if not _hopf_ok(x):
            return False, f"random element {k}: {x}"
    return True, "generators N = 2, 3, 4; 20 random elements N = 2"


def c7():
    rng = random.Random(7)
    for k in range(100):
        n = 2 if k % 2 else 3
        x, y = random_monomial(rng, n, 3), random_monomial(rng, n, 3)
        (w1,), (w2,) = x.terms, y.terms
        g = bidegree(w1, n) + bidegree(w2, n)
        if any(bidegree(w, n) != g for w in (x * y).terms):
            return False, f"additivity: {x}, {y}"
    for k in range(50):
        n = 2 if k % 2 else 3
        x = random_monomial(rng, n, 3)
        keys = set(decompose(x))
        if set(decompose(star(x))) != {-g for g in keys}:
            return False, f"star grade: {x}"
        if set(decompose(antipode(x))) != {-g.swap() for g in keys}:
            return False, f"antipode grade: {x}"
        y = x + star(x) + antipode(x)
        total = AlgElement(n)
        for part in decompose(y).values():
            total = total + part
        if total != y:
            return False, f"reconstruction: {y}"
    return True, "100 pairs, 50 monomials"


def c8():
    rng = random.Random(8)
    count = 0
    while count < 50:
        w = random_normal_word(rng, 2, 4)
        if bidegree(w, 2).is_zero():
            continue
        if haar(monomial_element(2, w), project=False) != ZERO:
            return False, f"word {w}"
        count += 1
    return True, "50 monomials, unprojected solver"


def c9():
    rng = random.Random(9)
    for n, total in ((2, 4), (3, 2)):
        cache = HaarCache(n)
        for _ in range(50):
            k = rng.randint(1, total)
            x = random_monomial(rng, n, k, 0)
            y = random_monomial(rng, n, max(total - x.degree(), 0), 0)
            if haar(x * y, cache) != haar(theta(y) * x, cache):
                return False, f"N = {n}: x = {x}, y = {y}"
    return True, "50 pairs each at N = 2, 3"


def c10():
    z = zeta()
    for n in (1, 2, 3):
        if ks_projection_expansion(n) != tensor_project_right(coproduct(z**n)):
            return False, f"n = {n}"
    return True, "n = 1, 2, 3"


def c11():
    for n in (2, 3, 4):
        for i in range(1, n + 1):
            if fundamental_norm_L(n, i).eval_at(1) != Fraction(1, n):
                return False, f"N = {n}, i = {i}"
    return True, "N = 2, 3, 4"


def c12():
    report = run_checks(2)
    text = report.render()
    grading = [s for s in report.notes if "b in A[1, -1]" in s]
    factor = [s for s in report.notes if "h(zeta^" in s and "computed" in s and "off by" in s]
    ok = report.ok and bool(grading) and bool(factor) and all(f"note: {s}" in text for s in report.notes)
    return ok, f"{len(report.notes)} notes"


CRITERIA = [
    (1, "h(zeta) at N = 2", c1, 1),
    (2, "zeta recursion n = 1..5", c2, 30),
    (3, "fundamental norms N = 2, 3, 4", c3, None),
    (4, "orthogonality N = 2, 3", c4, None),
    (5, "unitarity relations", c5, None),
    (6, "Hopf axioms", c6, None),
    (7, "grading", c7, None),
    (8, "vanishing on nonzero grades", c8, None),
    (9, "modular property", c9, None),
    (10, "projected coproduct of zeta^n", c10, None),
    (11, "classical limit", c11, None),
    (12, "erratum notes in verify", c12, None),
]


@pytest.mark.parametrize("number, title, fn, limit", CRITERIA, ids=[str(c[0]) for c in CRITERIA])
def test_criterion(number, title, fn, limit):
    ok, detail, seconds = timed(fn)
    within = limit is None or seconds < limit
    if not within:
        detail = f"{detail}; took {seconds:.1f}s, limit {limit}s"
    record(number, title, ok and within, seconds, detail)
    assert ok, detail
    assert within, detail


if __name__ == "__main__":
    for number, title, fn, limit in CRITERIA:
        ok, detail, seconds = timed(fn)
        within = limit is None or seconds < limit
        record(number, title, ok and within, seconds, detail)
        print(RESULTS[-1])
