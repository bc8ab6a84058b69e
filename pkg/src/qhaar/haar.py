"""The Haar state on O(SU_q(N)) and the two Hermitian forms built from it.

h is never taken from a closed formula.  It is solved from the invariance
equations ``(id (x) h) Delta(m) = h(m) 1`` and ``(h (x) id) Delta(m) = h(m) 1``
over all K-bi-invariant normal monomials up to the required degree,
together with h(1) = 1.  Bi-invariant monomials use every row and every
column equally often, so they only occur in degrees divisible by N.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from .algebra import AlgElement, engine, generator, word_to_pairs, pairs_to_word
from .grading import is_bi_invariant, project_00
from .hopf import TensorElement, _tables, star, tensor
from .linsolve import SingularSystemError, solve
from .qcoeff import ONE, ZERO, QScalar, qbinom, qint, qpow

__all__ = [
    "CONVENTION",
    "DEFAULT_MAX_DEGREE",
    "HaarCache",
    "InsufficientConstraintsError",
    "DegreeGuardError",
    "CacheFormatError",
    "default_cache",
    "bi_invariant_monomials",
    "haar",
    "inner_L",
    "inner_R",
    "zeta",
    "haar_zeta_closed",
    "fundamental_norm_L",
    "fundamental_norm_R",
    "ket_normalizer_sq",
    "qpochhammer",
    "ks_projection_expansion",
]

CONVENTION = "frt-q-standard-v1"

# CLI guard on the solver degree
DEFAULT_MAX_DEGREE = {2: 8, 3: 4, 4: 4}


class InsufficientConstraintsError(ValueError):
    def __init__(self, degree, rank=None, nunknowns=None):
        self.degree = degree
        detail = "" if rank is None else f" (rank {rank} of {nunknowns})"
        super().__init__(f"insufficient invariance constraints at degree {degree}{detail}")


class DegreeGuardError(ValueError):
    pass


class CacheFormatError(ValueError):
    pass


class HaarCache:
    """Solved Haar values of K-bi-invariant normal monomials for one N.

    Inserts are idempotent: re-inserting a key with the same value is a
    no-op, a different value is an error.
    """

    def __init__(self, n: int):
        self.n = n
        self.values = {(): ONE}
        self.solved_degree = 0
        self._lock = threading.Lock()

    def __contains__(self, word):
        return tuple(word) in self.values

    def get(self, word):
        return self.values.get(tuple(word))

    def insert(self, word, value: QScalar):
        word = tuple(word)
        if not is_bi_invariant(word, self.n):
            raise ValueError("only K-bi-invariant monomials are cached")
        with self._lock:
            old = self.values.get(word)
            if old is not None and old != value:
                raise ValueError(f"conflicting Haar values for {word}: {old} vs {value}")
            self.values[word] = value

    def mark_solved(self, degree: int):
        with self._lock:
            self.solved_degree = max(self.solved_degree, degree)

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "degree": self.solved_degree,
            "convention": CONVENTION,
            "values": {
                json.dumps(word_to_pairs(w, self.n)): v.to_json()
                for w, v in sorted(self.values.items(), key=lambda kv: (len(kv[0]), kv[0]))
            },
        }

    @classmethod
    def from_json(cls, obj, n=None) -> "HaarCache":
        if obj.get("convention") != CONVENTION:
            raise CacheFormatError(
                f"cache convention {obj.get('convention')!r} does not match {CONVENTION!r}"
            )
        if n is not None and obj.get("N") != n:
            raise CacheFormatError(f"cache is for N = {obj.get('N')}, requested N = {n}")
        cache = cls(obj["N"])
        for key, val in obj["values"].items():
            cache.insert(pairs_to_word(json.loads(key), cache.n), QScalar.from_json(val))
        cache.solved_degree = int(obj["degree"])
        return cache

    def save(self, path):
        Path(path).write_text(json.dumps(self.to_json(), indent=1))

    @classmethod
    def load(cls, path, n=None) -> "HaarCache":
        return cls.from_json(json.loads(Path(path).read_text()), n)


_DEFAULT_CACHES = {}


def default_cache(n: int) -> HaarCache:
    cache = _DEFAULT_CACHES.get(n)
    if cache is None:
        cache = _DEFAULT_CACHES.setdefault(n, HaarCache(n))
    return cache


def bi_invariant_monomials(n: int, degree: int):
    """Normal monomials of exactly ``degree`` lying in A[0,0], in monomial order."""
    if degree % n:
        return []
    k = degree // n
    eng = engine(n)
    out = []

    def rows_from(r, caps, acc):
        if r == n:
            if not any(caps):
                word = tuple(
                    letter for row, exps in enumerate(acc) for col, e in enumerate(exps)
                    for letter in [row * n + col] * e
                )
                if not eng.is_reducible(word):
                    out.append(word)
            return
        for exps in _compositions(k, caps):
            rows_from(r + 1, [c - e for c, e in zip(caps, exps)], acc + [exps])

    rows_from(0, [k] * n, [])
    return sorted(out)


def _compositions(total, caps):
    if len(caps) == 1:
        if total <= caps[0]:
            yield (total,)
        return
    for e in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - e, caps[1:]):
            yield (e,) + rest


def _invariance_rows(n, words, index, known, sides=("left", "right"), project=True):
    """Linear equations from left/right invariance of h for each word.

    ``index`` maps unknown words to columns; ``known`` maps words to values.
    Words absent from both are taken as zero (only allowed when ``project``).
    """
    tab = _tables(n)
    rows = []
    for m in words:
        cop = tab.coproduct_word(m)
        for side in sides:
            groups = {}
            for (l, r), c in cop.items():
                outer, inner = (l, r) if side == "left" else (r, l)
                if project and not is_bi_invariant(inner, n):
                    continue
                groups.setdefault(outer, []).append((inner, c))
            groups.setdefault((), [])
            for outer, pairs in groups.items():
                coeffs = {}
                rhs = ZERO
                for inner, c in pairs:
                    c = QScalar.laurent(c)
                    if inner in index:
                        col = index[inner]
                        coeffs[col] = coeffs.get(col, ZERO) + c
                    elif inner in known:
                        rhs = rhs - c * known[inner]
                    elif not project:
                        raise KeyError(inner)
                if outer == ():
                    col = index.get(m)
                    if col is not None:
                        coeffs[col] = coeffs.get(col, ZERO) - ONE
                    else:
                        rhs = rhs + known[m]
                coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
                if coeffs or not rhs.is_zero():
                    rows.append((coeffs, rhs))
    return rows


def _solve_to_degree(n, degree, cache: HaarCache):
    if cache.solved_degree >= degree:
        return
    words = []
    for d in range(n, degree + 1, n):
        words.extend(w for w in bi_invariant_monomials(n, d) if w not in cache)
    if words:
        index = {w: i for i, w in enumerate(words)}
        rows = _invariance_rows(n, words, index, cache.values)
        try:
            values = solve(rows, len(words))
        except SingularSystemError as exc:
            raise InsufficientConstraintsError(degree, exc.rank, exc.nunknowns) from None
        for w, v in zip(words, values):
            cache.insert(w, v)
    cache.mark_solved(degree)


def _solve_unprojected(n, targets):
    """Haar values of arbitrary normal monomials from left invariance alone.

    Unknowns are the closure of ``targets`` under taking right legs of the
    coproduct; no grade information is used.
    """
    tab = _tables(n)
    unknowns = []
    seen = set()
    stack = [w for w in targets if w]
    while stack:
        w = stack.pop()
        if w in seen:
            continue
        seen.add(w)
        unknowns.append(w)
        for (_, r) in tab.coproduct_word(w):
            if r and r not in seen:
                stack.append(r)
    unknowns.sort(key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(unknowns)}
    rows = _invariance_rows(n, unknowns, index, {(): ONE}, sides=("left",), project=False)
    degree = max((len(w) for w in unknowns), default=0)
    try:
        values = solve(rows, len(unknowns))
    except SingularSystemError as exc:
        raise InsufficientConstraintsError(degree, exc.rank, exc.nunknowns) from None
    out = dict(zip(unknowns, values))
    out[()] = ONE
    return out


def haar(x: AlgElement, cache: HaarCache = None, *, project: bool = True, max_degree=None) -> QScalar:
    """Value of the Haar state on ``x``.

    With ``project`` (the default) only the A[0,0] component is evaluated
    and solved values are memoized in ``cache``.  ``project=False`` solves
    the full left-invariance system for the monomials of ``x`` instead.
    """
    n = x.n
    if cache is None:
        cache = default_cache(n)
    elif cache.n != n:
        raise ValueError(f"cache is for N = {cache.n}, element has N = {n}")
    if not project:
        degree = x.degree()
        if max_degree is not None and degree > max_degree:
            raise DegreeGuardError(f"degree {degree} exceeds the solver guard {max_degree}")
        values = _solve_unprojected(n, list(x.terms))
        total = ZERO
        for w, c in x.terms.items():
            total = total + c * values[w]
        return total
    x = project_00(x)
    degree = x.degree()
    if max_degree is not None and degree > max_degree:
        raise DegreeGuardError(f"degree {degree} exceeds the solver guard {max_degree}")
    if degree:
        _solve_to_degree(n, degree, cache)
    total = ZERO
    for w, c in x.terms.items():
        total = total + c * cache.values[w]
    return total


def inner_L(x: AlgElement, y: AlgElement, cache=None, **kw) -> QScalar:
    """<x, y>_L = h(x* y)."""
    return haar(star(x) * y, cache, **kw)


def inner_R(x: AlgElement, y: AlgElement, cache=None, **kw) -> QScalar:
    """<x, y>_R = h(x y*)."""
    return haar(x * star(y), cache, **kw)


# -- closed forms --------------------------------------------------------


def zeta() -> AlgElement:
    """zeta = -q b c = b* b in O(SU_q(2))."""
    return (generator(2, 1, 2) * generator(2, 2, 1)).scale(-qpow(1))


def haar_zeta_closed(n: int) -> QScalar:
    """h(zeta^n) = (1 - q^-2) / (1 - q^(-2(n+1))), telescoped from the recursion."""
    if n < 0:
        raise ValueError("haar_zeta_closed needs n >= 0")
    if n == 0:
        return ONE
    return (ONE - qpow(-2)) / (ONE - qpow(-2 * (n + 1)))


def _check_index(n, i):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"N must be >= 2, got {n!r}")
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")


def fundamental_norm_L(n: int, i: int) -> QScalar:
    """<u_ij, u_ij>_L = q^(N+1-2i) / [N]_q, for any column j."""
    _check_index(n, i)
    return qpow(n + 1 - 2 * i) / qint(n)


def fundamental_norm_R(n: int, j: int) -> QScalar:
    """<u_ij, u_ij>_R = q^(2j-N-1) / [N]_q, for any row i."""
    _check_index(n, j)
    return qpow(2 * j - n - 1) / qint(n)


def ket_normalizer_sq(n: int, i: int) -> QScalar:
    """1 / h(u_ij* u_ij) = q^(2i-N-1) [N]_q; the square root is left to the caller."""
    _check_index(n, i)
    return qpow(2 * i - n - 1) * qint(n)


# -- the projected coproduct of zeta^n ------------------------------------


def qpochhammer(x: AlgElement, p, k: int) -> AlgElement:
    """(x; p)_k = (1 - x)(1 - p x) ... (1 - p^(k-1) x); x must commute with itself only."""
    if k < 0:
        raise ValueError("qpochhammer needs k >= 0")
    out = AlgElement.scalar(x.n, ONE)
    pr = ONE
    for _ in range(k):
        out = out * (AlgElement.scalar(x.n, ONE) - x.scale(pr))
        pr = pr * p
    return out


def ks_projection_expansion(n: int) -> TensorElement:
    """Closed expansion of (id (x) P) Delta(zeta^n) as a sum over i + j = n."""
    if n < 1:
        raise ValueError("ks_projection_expansion needs n >= 1")
    z = zeta()
    p = qpow(-2)
    out = TensorElement(2)
    for i in range(n + 1):
        j = n - i
        coeff = qbinom(n, i, p) ** 2 * qpow(2 * i * j)
        left = (z ** j) * qpochhammer(z, qpow(2), i)
        right = (z ** i) * qpochhammer(z.scale(qpow(-2)), qpow(-2), j)
        out = out + tensor(left, right).scale(coeff)
    return out
