"""Sparse exact Gaussian elimination for the Haar invariance systems.

A system is a list of rows ``({col: coeff}, rhs)`` meaning
``sum coeff * x[col] = rhs``.  Entries are :class:`QScalar`.

The solve runs in two passes.  A numeric pass at a sampled rational q0
(plain Fractions, cheap) finds the rank, detects inconsistency and picks a
set of independent rows.  The symbolic pass then eliminates only those
rows over Q(q), choosing pivots with the fewest Laurent terms.  The
symbolic answer is finally checked against every row at a second sample.
"""

from __future__ import annotations

from fractions import Fraction

from .qcoeff import QScalar, ZERO

__all__ = [
    "SingularSystemError",
    "InconsistentSystemError",
    "solve",
    "rref",
    "SAMPLE_POINTS",
]

SAMPLE_POINTS = (Fraction(7, 3), Fraction(11, 5), Fraction(13, 4), Fraction(17, 6))


class SingularSystemError(ValueError):
    def __init__(self, rank, nunknowns, msg=None):
        self.rank = rank
        self.nunknowns = nunknowns
        super().__init__(msg or f"system has rank {rank} < {nunknowns} unknowns")


class InconsistentSystemError(ValueError):
    pass


_RHS = -1


def rref(rows, is_zero, pick):
    """Incremental reduced row echelon form.

    ``rows`` are dicts col -> value with the right-hand side under key -1.
    ``pick(row)`` chooses the pivot column among the unknown columns.
    Returns (basis, used) where basis maps pivot col -> normalized row and
    used lists the indices of rows that contributed a pivot.  Raises
    InconsistentSystemError if a row reduces to 0 = nonzero.
    """
    basis = {}
    used = []
    for idx, row in enumerate(rows):
        r = {k: v for k, v in row.items() if not is_zero(v)}
        for p in [c for c in r if c in basis]:
            f = r.get(p)
            if f is None:
                continue
            for c, v in basis[p].items():
                nv = r.get(c, 0) - f * v if c in r else -(f * v)
                if is_zero(nv):
                    r.pop(c, None)
                else:
                    r[c] = nv
        cols = [c for c in r if c != _RHS]
        if not cols:
            if _RHS in r:
                raise InconsistentSystemError(f"row {idx} reduces to 0 = {r[_RHS]}")
            continue
        p = pick(r, cols)
        inv = 1 / r[p]
        r = {c: v * inv for c, v in r.items()}
        for brow in basis.values():
            f = brow.get(p)
            if f is None:
                continue
            for c, v in r.items():
                nv = brow.get(c, 0) - f * v if c in brow else -(f * v)
                if is_zero(nv):
                    brow.pop(c, None)
                else:
                    brow[c] = nv
        basis[p] = r
        used.append(idx)
    return basis, used


def _numeric_rows(rows, q0):
    out = []
    for coeffs, rhs in rows:
        r = {c: v.eval_at(q0) for c, v in coeffs.items()}
        if rhs:
            r[_RHS] = rhs.eval_at(q0)
        out.append(r)
    return out


def _numeric_zero(v):
    return v == 0


def _symbolic_zero(v):
    return v.is_zero() if isinstance(v, QScalar) else v == 0


def _first(r, cols):
    return min(cols)


def _simplest(r, cols):
    return min(cols, key=lambda c: (r[c].complexity(), c))


def solve(rows, nunknowns: int, samples=SAMPLE_POINTS):
    """Unique solution of an exact system over Q(q) as a list of QScalars.

    Raises SingularSystemError when the rank is below ``nunknowns`` at every
    sample point, InconsistentSystemError when the rows contradict each other.
    """
    if nunknowns == 0:
        return []
    chosen = None
    best_rank = 0
    for q0 in samples:
        try:
            num = _numeric_rows(rows, q0)
        except ZeroDivisionError:
            continue
        basis, used = rref(num, _numeric_zero, _first)
        if len(basis) == nunknowns:
            chosen = used
            break
        best_rank = max(best_rank, len(basis))
    if chosen is None:
        raise SingularSystemError(best_rank, nunknowns)

    sym = []
    for i in chosen:
        coeffs, rhs = rows[i]
        r = dict(coeffs)
        if rhs:
            r[_RHS] = rhs
        sym.append(r)
    basis, _ = rref(sym, _symbolic_zero, _simplest)
    if len(basis) != nunknowns:
        raise SingularSystemError(len(basis), nunknowns, "symbolic rank below numeric rank")
    solution = [basis[c].get(_RHS, ZERO) for c in range(nunknowns)]

    _check(rows, solution, samples)
    return solution


def _check(rows, solution, samples):
    for q0 in reversed(samples):
        try:
            vals = [s.eval_at(q0) for s in solution]
            num = _numeric_rows(rows, q0)
        except ZeroDivisionError:
            continue
        for idx, r in enumerate(num):
            lhs = sum((v * vals[c] for c, v in r.items() if c != _RHS), Fraction(0))
            if lhs != r.get(_RHS, 0):
                raise InconsistentSystemError(f"row {idx} violated by the symbolic solution")
        return
