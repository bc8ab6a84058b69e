"""K-bigrading of O(SL_q(N)) by the torus characters of the left/right coactions.

A letter u[i,j] has bidegree (e_i, e_j) in Z^(N-1) x Z^(N-1), where e_k is the
k-th unit vector for k < N and e_N = (-1, ..., -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgElement
from .hopf import TensorElement

__all__ = [
    "BiDegree",
    "bidegree",
    "is_bi_invariant",
    "decompose",
    "project_00",
    "tensor_project_right",
    "tensor_project_left",
]


@dataclass(frozen=True)
class BiDegree:
    alpha: tuple
    beta: tuple

    def __add__(self, other):
        return BiDegree(
            tuple(x + y for x, y in zip(self.alpha, other.alpha)),
            tuple(x + y for x, y in zip(self.beta, other.beta)),
        )

    def __neg__(self):
        return BiDegree(tuple(-x for x in self.alpha), tuple(-x for x in self.beta))

    def swap(self):
        return BiDegree(self.beta, self.alpha)

    def is_zero(self):
        return not any(self.alpha) and not any(self.beta)

    def to_json(self):
        return [list(self.alpha), list(self.beta)]

    def __str__(self):
        if len(self.alpha) == 1:
            return f"[{self.alpha[0]}, {self.beta[0]}]"
        return f"[{list(self.alpha)}, {list(self.beta)}]"


@lru_cache(maxsize=None)
def _unit(n: int, k: int) -> tuple:
    # k is 0-based
    if k == n - 1:
        return (-1,) * (n - 1)
    return tuple(1 if t == k else 0 for t in range(n - 1))


@lru_cache(maxsize=None)
def _counts(word: tuple, n: int) -> tuple:
    rows = [0] * n
    cols = [0] * n
    for w in word:
        r, c = divmod(w, n)
        rows[r] += 1
        cols[c] += 1
    return tuple(rows), tuple(cols)


def bidegree(word, n: int) -> BiDegree:
    """(alpha, beta) with L_K(m) = z^alpha (x) m and R_K(m) = m (x) z^beta."""
    word = tuple(word)
    for w in word:
        if not 0 <= w < n * n:
            raise IndexError(f"letter {w} out of range for N = {n}")
    rows, cols = _counts(word, n)
    # sum_k count_k e_k = (count_k - count_N)_k
    return BiDegree(
        tuple(rows[k] - rows[-1] for k in range(n - 1)),
        tuple(cols[k] - cols[-1] for k in range(n - 1)),
    )


def is_bi_invariant(word, n: int) -> bool:
    rows, cols = _counts(tuple(word), n)
    return len(set(rows)) == 1 and len(set(cols)) == 1


def decompose(x: AlgElement) -> dict:
    """Map BiDegree -> homogeneous component; empty components omitted."""
    parts = {}
    for w, c in x.terms.items():
        parts.setdefault(bidegree(w, x.n), {})[w] = c
    return {k: AlgElement._raw(x.n, v) for k, v in parts.items()}


def project_00(x: AlgElement) -> AlgElement:
    """Projection onto the K-bi-invariant part A[0,0]."""
    return AlgElement._raw(x.n, {w: c for w, c in x.terms.items() if is_bi_invariant(w, x.n)})


def tensor_project_right(t: TensorElement) -> TensorElement:
    """(id (x) P): keep terms whose right leg is bi-invariant."""
    return TensorElement._raw(
        t.n, {(l, r): c for (l, r), c in t.terms.items() if is_bi_invariant(r, t.n)}
    )


def tensor_project_left(t: TensorElement) -> TensorElement:
    """(P (x) id)."""
    return TensorElement._raw(
        t.n, {(l, r): c for (l, r), c in t.terms.items() if is_bi_invariant(l, t.n)}
    )
