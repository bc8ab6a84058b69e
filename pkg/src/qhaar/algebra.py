"""The coordinate algebra O(SL_q(N)) in a PBW normal form.

Generators ``u[i,j]`` (1-based) are encoded as letters ``(i-1)*N + (j-1)``,
so integer order is lexicographic order on (row, col).  A monomial is a
tuple of letters.  Normal monomials are sorted and do not contain every
diagonal letter ``u[1,1] .. u[N,N]`` (those are reduced through D_q = 1).

Commutation relations (i < j, k < l)::

    u[i,k] u[i,l] = q u[i,l] u[i,k]          same row
    u[i,k] u[j,k] = q u[j,k] u[i,k]          same column
    u[i,l] u[j,k] = u[j,k] u[i,l]
    u[i,k] u[j,l] - u[j,l] u[i,k] = (q - 1/q) u[i,l] u[j,k]

so for N = 2: ab = qba, ac = qca, bc = cb, ad - da = (q - 1/q) bc.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from .qcoeff import LaurentPoly, QScalar, ONE, ZERO, as_scalar

__all__ = [
    "AlgElement",
    "Engine",
    "engine",
    "generator",
    "generators",
    "multiply",
    "quantum_minor",
    "quantum_determinant",
    "det_reduce",
    "monomial_element",
    "element_from_words",
    "word_to_pairs",
    "pairs_to_word",
    "letter_name",
]

_L_ONE = LaurentPoly.const(1)
_L_QINV = LaurentPoly.monomial(-1)
# -(q - q^-1)
_L_CROSS = LaurentPoly({1: -1, -1: 1})


def _check_n(n):
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"matrix size N must be an integer >= 2, got {n!r}")


def _acc(target: dict, word, coeff: LaurentPoly):
    c = target.get(word)
    if c is None:
        target[word] = coeff
    else:
        c = c + coeff
        if c.is_zero():
            del target[word]
        else:
            target[word] = c


def inversions(perm) -> int:
    return sum(1 for a, b in itertools.combinations(perm, 2) if a > b)


class Engine:
    """Rewriting tables for one matrix size N.

    All caches are memo tables of pure functions: a key always maps to the
    same value, so concurrent fills are harmless.
    """

    def __init__(self, n: int):
        _check_n(n)
        self.n = n
        self.diag = tuple(k * n + k for k in range(n))
        self._insert = {}
        self._reduce = {}
        self._product = {}
        # D_q terms as (sorted word, coefficient); rows ascending gives sorted words.
        self.det_terms = self.minor_terms(range(1, n + 1), range(1, n + 1))
        self.diag_weight = [(r - c) ** 2 for r in range(n) for c in range(n)]

    def letter(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"generator u[{i},{j}] out of range for N = {self.n}")
        return (i - 1) * self.n + (j - 1)

    def minor_terms(self, rows, cols):
        rows, cols = sorted(rows), sorted(cols)
        out = []
        for perm in itertools.permutations(range(len(cols))):
            word = tuple((r - 1) * self.n + (cols[p] - 1) for r, p in zip(rows, perm))
            ell = inversions(perm)
            out.append((word, LaurentPoly.monomial(ell, (-1) ** ell)))
        return out

    # -- FRT normal form in O(M_q(N)) -------------------------------------

    def swap(self, y: int, x: int):
        """Rewrite the out-of-order pair ``y x`` (y > x) as a list of (word, coeff)."""
        n = self.n
        ry, cy = divmod(y, n)
        rx, cx = divmod(x, n)
        if ry == rx or cy == cx:
            return [((x, y), _L_QINV)]
        if cy < cx:
            return [((x, y), _L_ONE)]
        # y = u[j,l], x = u[i,k] with i < j, k < l
        a, b = rx * n + cy, ry * n + cx
        return [((x, y), _L_ONE), ((a, b), _L_CROSS)]

    def insert(self, word: tuple, x: int) -> dict:
        """FRT normal form of ``word * x`` for a sorted ``word``."""
        if not word or word[-1] <= x:
            return {word + (x,): _L_ONE}
        key = (word, x)
        hit = self._insert.get(key)
        if hit is not None:
            return hit
        head, y = word[:-1], word[-1]
        out = {}
        for (s, t), c in self.swap(y, x):
            if t == y:
                # letters of head*s are all <= y, so appending y keeps order
                for w, cw in self.insert(head, s).items():
                    _acc(out, w + (y,), cw * c)
            else:
                for w, cw in self.insert(head, s).items():
                    for w2, cw2 in self.insert(w, t).items():
                        _acc(out, w2, cw * cw2 * c)
        self._insert[key] = out
        return out

    def frt_times_word(self, word: tuple, letters) -> dict:
        cur = {word: _L_ONE}
        for x in letters:
            nxt = {}
            for w, c in cur.items():
                for w2, c2 in self.insert(w, x).items():
                    _acc(nxt, w2, c * c2)
            cur = nxt
        return cur

    def frt_normal(self, letters) -> dict:
        return self.frt_times_word((), letters)

    # -- determinant reduction -------------------------------------------

    def is_reducible(self, word: tuple) -> bool:
        if len(word) < self.n:
            return False
        s = set(word)
        return all(d in s for d in self.diag)

    def reduce_word(self, word: tuple) -> dict:
        """Normal form in O(SL_q(N)) of a sorted word."""
        if not self.is_reducible(word):
            return {word: _L_ONE}
        hit = self._reduce.get(word)
        if hit is not None:
            return hit
        rest = list(word)
        for d in self.diag:
            rest.remove(d)
        rest = tuple(rest)
        # rest * D_q == rest; the term c*word of rest*D_q is its leading part,
        # every other term sits strictly further from the diagonal.
        expansion = {}
        for dword, dc in self.det_terms:
            for w, c in self.frt_times_word(rest, dword).items():
                _acc(expansion, w, c * dc)
        lead = expansion.pop(word)
        assert lead.is_monomial(), "leading coefficient of a reordered word is a power of q"
        inv = lead ** -1
        out = {}
        for w, c in self.reduce_word(rest).items():
            _acc(out, w, c * inv)
        for t, ct in expansion.items():
            for w, c in self.reduce_word(t).items():
                _acc(out, w, -(c * ct * inv))
        self._reduce[word] = out
        return out

    def reduce_terms(self, terms: dict) -> dict:
        out = {}
        for w, c in terms.items():
            for w2, c2 in self.reduce_word(w).items():
                _acc(out, w2, c * c2)
        return out

    def product(self, m1: tuple, m2: tuple) -> dict:
        """Normal form of m1 * m2 for normal monomials, Laurent coefficients."""
        if not m2:
            return {m1: _L_ONE}
        if not m1:
            return {m2: _L_ONE}
        key = (m1, m2)
        hit = self._product.get(key)
        if hit is None:
            hit = self.reduce_terms(self.frt_times_word(m1, m2))
            self._product[key] = hit
        return hit

    def normal(self, letters) -> dict:
        return self.reduce_terms(self.frt_normal(tuple(letters)))


@lru_cache(maxsize=None)
def engine(n: int) -> Engine:
    return Engine(n)


class AlgElement:
    """Finite combination of normal monomials with coefficients in Q(q).

    Construct through :func:`generator`, :func:`element_from_words` or
    arithmetic; the bare constructor trusts that ``terms`` is already
    normal (sorted words) and drops zero coefficients.
    """

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms=None):
        _check_n(n)
        self.n = n
        clean = {}
        if terms:
            for w, c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    clean[tuple(w)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n, terms):
        e = object.__new__(cls)
        e.n = n
        e.terms = terms
        e._hash = None
        return e

    @classmethod
    def scalar(cls, n: int, c) -> "AlgElement":
        return cls(n, {(): as_scalar(c)})

    @classmethod
    def from_laurent(cls, n: int, terms: dict) -> "AlgElement":
        return cls._raw(n, {w: QScalar.laurent(c) for w, c in terms.items() if not c.is_zero()})

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def coeff(self, word) -> QScalar:
        return self.terms.get(tuple(word), ZERO)

    def scalar_part(self) -> QScalar:
        return self.terms.get((), ZERO)

    def scalar_value(self):
        """The coefficient if this element is a multiple of 1, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and () in self.terms:
            return self.terms[()]
        return None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, AlgElement):
            if other.n != self.n:
                raise ValueError(f"size mismatch: N = {self.n} vs N = {other.n}")
            return other
        return AlgElement.scalar(self.n, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            if s is None:
                out[w] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[w]
                else:
                    out[w] = s
        return AlgElement._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgElement._raw(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "AlgElement":
        c = as_scalar(c)
        if c.is_zero():
            return AlgElement._raw(self.n, {})
        return AlgElement._raw(self.n, {w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgElement):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of algebra elements are not defined")
        out = AlgElement.scalar(self.n, ONE)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, QScalar)):
            return self == AlgElement.scalar(self.n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        from .expr import format_element

        return f"AlgElement(N={self.n}, {format_element(self)})"

    def __str__(self):
        from .expr import format_element

        return format_element(self)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "N": self.n,
            "terms": [
                {"word": word_to_pairs(w, self.n), "coeff": c.to_json()}
                for w, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "AlgElement":
        n = obj["N"]
        terms = {}
        for t in obj["terms"]:
            terms[pairs_to_word(t["word"], n)] = QScalar.from_json(t["coeff"])
        return cls(n, terms)


def word_to_pairs(word, n):
    return [[w // n + 1, w % n + 1] for w in word]


def pairs_to_word(pairs, n):
    eng = engine(n)
    return tuple(eng.letter(int(i), int(j)) for i, j in pairs)


def letter_name(x: int, n: int) -> str:
    i, j = divmod(x, n)
    if n == 2:
        return "abcd"[x]
    return f"u[{i + 1},{j + 1}]"


def multiply(x: AlgElement, y: AlgElement) -> AlgElement:
    """Normal-form product in O(SL_q(N))."""
    if x.n != y.n:
        raise ValueError(f"size mismatch: N = {x.n} vs N = {y.n}")
    eng = engine(x.n)
    out = {}
    for w1, c1 in x.terms.items():
        for w2, c2 in y.terms.items():
            c12 = c1 * c2
            for w, c in eng.product(w1, w2).items():
                v = c12 * QScalar.laurent(c) if not c.is_one() else c12
                s = out.get(w)
                if s is None:
                    out[w] = v
                else:
                    s = s + v
                    if s.is_zero():
                        del out[w]
                    else:
                        out[w] = s
    return AlgElement._raw(x.n, out)


def generator(n: int, i: int, j: int) -> AlgElement:
    eng = engine(n)
    return AlgElement._raw(n, {(eng.letter(i, j),): ONE})


def generators(n: int):
    """The matrix [[u_11, ..., u_1N], ...] as nested lists."""
    return [[generator(n, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]


def monomial_element(n: int, word, reduce: bool = True) -> AlgElement:
    """A single word.  Sorted words only; with ``reduce=False`` D_q is not imposed."""
    word = tuple(word)
    if list(word) != sorted(word):
        raise ValueError("monomial_element expects a sorted word; use element_from_words")
    if reduce:
        return AlgElement.from_laurent(n, engine(n).reduce_word(word))
    return AlgElement._raw(n, {word: ONE})


def element_from_words(n: int, terms: dict) -> AlgElement:
    """Normal form of ``sum coeff * word`` for arbitrary (unsorted) words of letters."""
    eng = engine(n)
    out = AlgElement(n)
    for word, c in terms.items():
        out = out + AlgElement.from_laurent(n, eng.normal(word)).scale(c)
    return out


def quantum_minor(n: int, rows, cols, reduce: bool = True) -> AlgElement:
    """Quantum minor sum_s (-q)^len(s) u[r1, c_s(1)] ... u[rk, c_s(k)]."""
    rows, cols = sorted(set(rows)), sorted(set(cols))
    if not rows or len(rows) != len(cols):
        raise ValueError("quantum_minor needs nonempty row and column sets of equal size")
    eng = engine(n)
    for i in rows:
        for j in cols:
            eng.letter(i, j)
    terms = {}
    for w, c in eng.minor_terms(rows, cols):
        _acc(terms, w, c)
    if reduce:
        terms = eng.reduce_terms(terms)
    return AlgElement.from_laurent(n, terms)


def quantum_determinant(n: int, reduce: bool = False) -> AlgElement:
    return quantum_minor(n, range(1, n + 1), range(1, n + 1), reduce=reduce)


def det_reduce(x: AlgElement) -> AlgElement:
    """Impose D_q = 1 on an element whose words are sorted."""
    eng = engine(x.n)
    out = AlgElement(x.n)
    for w, c in x.terms.items():
        out = out + AlgElement.from_laurent(x.n, eng.reduce_word(w)).scale(c)
    return out
