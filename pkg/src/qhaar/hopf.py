"""Hopf *-structure on O(SL_q(N)): coproduct, counit, antipode, star, theta."""

from __future__ import annotations

from functools import lru_cache

from .algebra import AlgElement, _acc, engine, quantum_minor, word_to_pairs, pairs_to_word
from .qcoeff import LaurentPoly, QScalar, ONE, ZERO, as_scalar

__all__ = [
    "TensorElement",
    "tensor",
    "coproduct",
    "counit",
    "antipode",
    "star",
    "theta",
    "multiply_legs",
    "apply_left",
    "apply_right",
    "functional_left",
    "functional_right",
    "coproduct_iterated",
]


class TensorElement:
    """Finite combination of ``left (x) right`` with normal monomial legs."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        clean = {}
        if terms:
            for (l, r), c in terms.items():
                c = as_scalar(c)
                if not c.is_zero():
                    clean[(tuple(l), tuple(r))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n, terms):
        t = object.__new__(cls)
        t.n = n
        t.terms = terms
        return t

    @classmethod
    def from_laurent(cls, n, terms):
        return cls._raw(n, {k: QScalar.laurent(c) for k, c in terms.items() if not c.is_zero()})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError("size mismatch")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TensorElement._raw(self.n, out)

    def __neg__(self):
        return TensorElement._raw(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_scalar(c)
        if c.is_zero():
            return TensorElement._raw(self.n, {})
        return TensorElement._raw(self.n, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        if other.n != self.n:
            raise ValueError("size mismatch")
        eng = engine(self.n)
        out = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c12 = c1 * c2
                left = eng.product(l1, l2)
                right = eng.product(r1, r2)
                for wl, cl in left.items():
                    for wr, cr in right.items():
                        v = c12 * QScalar.laurent(cl * cr)
                        key = (wl, wr)
                        s = out.get(key)
                        s = v if s is None else s + v
                        if s.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = s
        return TensorElement._raw(self.n, out)

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0][0], len(kv[0][1]), kv[0][1]))

    def __str__(self):
        from .expr import format_element

        if not self.terms:
            return "0"
        parts = []
        for (l, r), c in self.sorted_terms():
            le = format_element(AlgElement._raw(self.n, {l: c}))
            re_ = format_element(AlgElement._raw(self.n, {r: ONE}))
            parts.append(f"({le}) (x) ({re_})")
        return " + ".join(parts)

    def __repr__(self):
        return f"TensorElement(N={self.n}, {self})"

    def to_json(self):
        return {
            "N": self.n,
            "terms": [
                {
                    "left": word_to_pairs(l, self.n),
                    "right": word_to_pairs(r, self.n),
                    "coeff": c.to_json(),
                }
                for (l, r), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, obj):
        n = obj["N"]
        terms = {}
        for t in obj["terms"]:
            key = (pairs_to_word(t["left"], n), pairs_to_word(t["right"], n))
            terms[key] = QScalar.from_json(t["coeff"])
        return cls(n, terms)


def tensor(x: AlgElement, y: AlgElement) -> TensorElement:
    """x (x) y."""
    if x.n != y.n:
        raise ValueError("size mismatch")
    out = {}
    for l, cl in x.terms.items():
        for r, cr in y.terms.items():
            out[(l, r)] = cl * cr
    return TensorElement._raw(x.n, out)


class _Tables:
    """Per-N memo tables for coproduct, antipode and star images of monomials."""

    def __init__(self, n):
        self.n = n
        self.eng = engine(n)
        self.cop_letter = {}
        for i in range(n):
            for j in range(n):
                self.cop_letter[i * n + j] = [(i * n + k, k * n + j) for k in range(n)]
        self._cop = {(): {((), ()): LaurentPoly.const(1)}}
        self._anti = {}
        self._star = {}
        self.anti_letter = {}
        self.star_letter = {}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                rows = [r for r in range(1, n + 1) if r != j]
                cols = [c for c in range(1, n + 1) if c != i]
                m = quantum_minor(n, rows, cols)
                self.anti_letter[(i - 1) * n + (j - 1)] = m.scale(
                    QScalar.laurent(LaurentPoly.monomial(i - j, (-1) ** abs(i - j)))
                )
        for i in range(n):
            for j in range(n):
                self.star_letter[i * n + j] = self.anti_letter[j * n + i]

    def coproduct_word(self, word):
        hit = self._cop.get(word)
        if hit is not None:
            return hit
        prev = self.coproduct_word(word[:-1])
        eng = self.eng
        out = {}
        for (l, r), c in prev.items():
            for x, y in self.cop_letter[word[-1]]:
                left = eng.product(l, (x,))
                right = eng.product(r, (y,))
                for wl, cl in left.items():
                    for wr, cr in right.items():
                        _acc(out, (wl, wr), c * cl * cr)
        self._cop[word] = out
        return out

    def antipode_word(self, word):
        if not word:
            return AlgElement.scalar(self.n, ONE)
        hit = self._anti.get(word)
        if hit is None:
            # S(w1 ... wk) = S(wk) ... S(w1)
            hit = self.anti_letter[word[-1]] * self.antipode_word(word[:-1])
            self._anti[word] = hit
        return hit

    def star_word(self, word):
        if not word:
            return AlgElement.scalar(self.n, ONE)
        hit = self._star.get(word)
        if hit is None:
            hit = self.star_letter[word[-1]] * self.star_word(word[:-1])
            self._star[word] = hit
        return hit


@lru_cache(maxsize=None)
def _tables(n) -> _Tables:
    return _Tables(n)


def coproduct(x: AlgElement) -> TensorElement:
    """Delta(u_ij) = sum_k u_ik (x) u_kj, extended multiplicatively."""
    tab = _tables(x.n)
    out = {}
    for w, c in x.terms.items():
        for key, cl in tab.coproduct_word(w).items():
            v = c * QScalar.laurent(cl)
            s = out.get(key)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return TensorElement._raw(x.n, out)


def _counit_word(word, n) -> bool:
    return all(w // n == w % n for w in word)


def counit(x: AlgElement) -> QScalar:
    """epsilon(u_ij) = delta_ij."""
    total = ZERO
    for w, c in x.terms.items():
        if _counit_word(w, x.n):
            total = total + c
    return total


def antipode(x: AlgElement) -> AlgElement:
    """S(u_ij) = (-q)^(i-j) times the quantum minor without row j and column i."""
    tab = _tables(x.n)
    out = AlgElement(x.n)
    for w, c in x.terms.items():
        out = out + tab.antipode_word(w).scale(c)
    return out


def star(x: AlgElement) -> AlgElement:
    """u_ij* = S(u_ji); conjugate-linear with q real, so coefficients are kept."""
    tab = _tables(x.n)
    out = AlgElement(x.n)
    for w, c in x.terms.items():
        out = out + tab.star_word(w).scale(c)
    return out


def _theta_exponent(word, n) -> int:
    # u[i,j] -> q^(2(N+1-i-j)); letters are 0-based here
    return sum(2 * (n - 1 - (w // n) - (w % n)) for w in word)


def theta(x: AlgElement) -> AlgElement:
    """Modular automorphism, diagonal on monomials."""
    n = x.n
    out = {}
    for w, c in x.terms.items():
        out[w] = c * QScalar.laurent(LaurentPoly.monomial(_theta_exponent(w, n)))
    return AlgElement._raw(n, out)


# -- tensor helpers ------------------------------------------------------


def multiply_legs(t: TensorElement) -> AlgElement:
    """m(l (x) r) = l r."""
    eng = engine(t.n)
    out = AlgElement(t.n)
    for (l, r), c in t.terms.items():
        out = out + AlgElement.from_laurent(t.n, eng.product(l, r)).scale(c)
    return out


def apply_left(t: TensorElement, f) -> TensorElement:
    """(f (x) id) for f mapping AlgElement -> AlgElement."""
    out = TensorElement(t.n)
    for (l, r), c in t.terms.items():
        fl = f(AlgElement._raw(t.n, {l: ONE}))
        out = out + tensor(fl, AlgElement._raw(t.n, {r: c}))
    return out


def apply_right(t: TensorElement, f) -> TensorElement:
    out = TensorElement(t.n)
    for (l, r), c in t.terms.items():
        fr = f(AlgElement._raw(t.n, {r: ONE}))
        out = out + tensor(AlgElement._raw(t.n, {l: c}), fr)
    return out


def functional_right(t: TensorElement, phi) -> AlgElement:
    """(id (x) phi) for a scalar functional phi on AlgElement."""
    out = {}
    for (l, r), c in t.terms.items():
        v = phi(AlgElement._raw(t.n, {r: ONE}))
        if not v.is_zero():
            _acc_scalar(out, l, c * v)
    return AlgElement._raw(t.n, out)


def functional_left(t: TensorElement, phi) -> AlgElement:
    """(phi (x) id)."""
    out = {}
    for (l, r), c in t.terms.items():
        v = phi(AlgElement._raw(t.n, {l: ONE}))
        if not v.is_zero():
            _acc_scalar(out, r, c * v)
    return AlgElement._raw(t.n, out)


def _acc_scalar(target, key, v):
    s = target.get(key)
    s = v if s is None else s + v
    if s.is_zero():
        target.pop(key, None)
    else:
        target[key] = s


def coproduct_iterated(x: AlgElement, side: str) -> dict:
    """(Delta (x) id) Delta (side='left') or (id (x) Delta) Delta (side='right').

    Returned as a map (w1, w2, w3) -> QScalar.
    """
    tab = _tables(x.n)
    out = {}
    for (l, r), c in coproduct(x).terms.items():
        if side == "left":
            for (a, b), cab in tab.coproduct_word(l).items():
                _acc_scalar(out, (a, b, r), c * QScalar.laurent(cab))
        elif side == "right":
            for (a, b), cab in tab.coproduct_word(r).items():
                _acc_scalar(out, (l, a, b), c * QScalar.laurent(cab))
        else:
            raise ValueError("side must be 'left' or 'right'")
    return out
