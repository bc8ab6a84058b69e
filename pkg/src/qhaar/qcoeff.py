"""Exact arithmetic in Q(q): Laurent polynomials and rational functions in q.

Coefficients are :class:`fractions.Fraction`; nothing in here ever touches a
float.  Values are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "LaurentPoly",
    "QScalar",
    "Q",
    "ONE",
    "ZERO",
    "qpow",
    "qint",
    "qbinom",
    "as_scalar",
]


def _frac(x):
    """Exact rational; integral values are kept as ``int`` for speed."""
    if isinstance(x, int) and not isinstance(x, bool):
        return x
    if isinstance(x, str):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def _norm(v):
    return v.numerator if v.denominator == 1 else v


def _norm_mul(a, b):
    r = a * b
    if type(r) is Fraction and r.denominator == 1:
        return r.numerator
    return r


class LaurentPoly:
    """Finite sum ``sum c_k q^k`` with rational ``c_k`` and integer ``k``.

    Zero coefficients are never stored, so two polynomials are equal iff
    their coefficient maps are equal.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, terms=None):
        c = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, v in items:
                v = _frac(v)
                if v:
                    c[int(k)] = c.get(int(k), 0) + v
                    if not c[int(k)]:
                        del c[int(k)]
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict) -> "LaurentPoly":
        # c must already be free of zeros
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def const(cls, v) -> "LaurentPoly":
        v = _frac(v)
        return cls._raw({0: v} if v else {})

    @classmethod
    def monomial(cls, k: int, v=1) -> "LaurentPoly":
        v = _frac(v)
        return cls._raw({k: v} if v else {})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._c)

    def items(self):
        """(exponent, coefficient) pairs in ascending exponent order."""
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    def is_one(self) -> bool:
        return len(self._c) == 1 and self._c.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def nterms(self) -> int:
        return len(self._c)

    def low(self) -> int:
        return min(self._c)

    def high(self) -> int:
        return max(self._c)

    def coeff(self, k: int) -> Fraction:
        return self._c.get(k, Fraction(0))

    def constant_value(self):
        """The rational value if the polynomial is constant, else None."""
        if not self._c:
            return Fraction(0)
        if len(self._c) == 1 and 0 in self._c:
            return self._c[0]
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        if not other._c:
            return self
        if not self._c:
            return other
        c = dict(self._c)
        for k, v in other._c.items():
            s = c.get(k)
            if s is None:
                c[k] = v
            else:
                s += v
                if s:
                    c[k] = s
                else:
                    del c[k]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            v = _frac(other)
            if not v:
                return LaurentPoly._raw({})
            return LaurentPoly._raw({k: _norm_mul(c, v) for k, c in self._c.items()})
        a, b = self._c, other._c
        if not a or not b:
            return LaurentPoly._raw({})
        if len(b) == 1:
            (kb, vb), = b.items()
            return LaurentPoly._raw({k + kb: v * vb for k, v in a.items()})
        if len(a) == 1:
            (ka, va), = a.items()
            return LaurentPoly._raw({k + ka: v * va for k, v in b.items()})
        c = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                k = ka + kb
                c[k] = c.get(k, 0) + va * vb
        return LaurentPoly._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def shift(self, n: int) -> "LaurentPoly":
        """Multiply by q^n."""
        if n == 0:
            return self
        return LaurentPoly._raw({k + n: v for k, v in self._c.items()})

    def scale(self, v) -> "LaurentPoly":
        return self * _frac(v)

    def __pow__(self, n: int):
        if n < 0:
            if self.is_monomial():
                (k, v), = self._c.items()
                return LaurentPoly._raw({k * n: _norm(Fraction(v) ** n)})
            raise ValueError("negative power of a non-unit Laurent polynomial")
        r = LaurentPoly.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def invert_q(self) -> "LaurentPoly":
        """Substitute q -> 1/q."""
        return LaurentPoly._raw({-k: v for k, v in self._c.items()})

    def eval_at(self, q0) -> Fraction:
        q0 = _frac(q0)
        total = Fraction(0)
        for k, v in self._c.items():
            total += v * q0 ** k
        return total

    # -- comparison and hashing -----------------------------------------

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ({0: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return _format_laurent(self)

    # -- dense helpers (ordinary polynomials after shifting) ---------------

    def _dense(self):
        """(valuation, ascending coefficient list)."""
        lo, hi = self.low(), self.high()
        out = [Fraction(0)] * (hi - lo + 1)
        for k, v in self._c.items():
            out[k - lo] = Fraction(v)
        return lo, out

    @classmethod
    def _from_dense(cls, coeffs, shift=0):
        return cls._raw({i + shift: _norm(v) for i, v in enumerate(coeffs) if v})


def _format_laurent(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, v in sorted(p._c.items(), reverse=True):
        sign = "-" if v < 0 else "+"
        a = -v if v < 0 else v
        if k == 0:
            body = str(a)
        else:
            qs = "q" if k == 1 else f"q^{k}"
            body = qs if a == 1 else f"{a}*{qs}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


# ordinary polynomial helpers on ascending dense lists -------------------


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    lead = b[-1]
    if len(a) - 1 < db:
        return [], _trim(a)
    quo = [Fraction(0)] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = a[i + db] / lead
        quo[i] = c
        if c:
            for j in range(db + 1):
                a[i + j] -= c * b[j]
    return _trim(quo), _trim(a[:db])


def _poly_gcd(a, b):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


class QScalar:
    """Element of Q(q), stored as a canonical fraction ``num/den``.

    Canonical form: gcd(num, den) = 1 as ordinary polynomials, the lowest
    exponent in ``den`` is 0 and ``den`` is monic in its top coefficient.
    Equality is therefore structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num)
        if not isinstance(den, LaurentPoly):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("QScalar with zero denominator")
        self.num, self.den = _canonical(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "QScalar":
        s = object.__new__(cls)
        s.num = num
        s.den = den
        s._hash = None
        return s

    @classmethod
    def laurent(cls, p: LaurentPoly) -> "QScalar":
        return cls._raw(p, _ONE_POLY)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def rational_value(self):
        """The rational number if this scalar does not depend on q, else None."""
        if not self.den.is_one():
            return None
        return self.num.constant_value()

    def complexity(self) -> int:
        """Number of stored Laurent terms; used for pivot selection."""
        return self.num.nterms() + self.den.nterms()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = as_scalar(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return QScalar._raw(self.num + other.num, _ONE_POLY)
            return QScalar(self.num + other.num, self.den)
        return QScalar(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return QScalar._raw(-self.num, self.den)

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, QScalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return QScalar._raw(self.num * other.num, _ONE_POLY)
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        return QScalar(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inv(self) -> "QScalar":
        if self.num.is_zero():
            raise ZeroDivisionError("inversion of zero in Q(q)")
        return QScalar(self.den, self.num)

    def __truediv__(self, other):
        return self * as_scalar(other).inv()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inv()

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        if self.den.is_one():
            return QScalar._raw(self.num ** n, _ONE_POLY)
        return QScalar._raw(self.num ** n, self.den ** n)

    def invert_q(self) -> "QScalar":
        """Substitute q -> 1/q."""
        return QScalar(self.num.invert_q(), self.den.invert_q())

    def eval_at(self, q0) -> Fraction:
        """Evaluate at a nonzero rational q0 that is not a pole."""
        q0 = _frac(q0)
        if q0 == 0:
            raise ZeroDivisionError("cannot evaluate a Laurent expression at q = 0")
        d = self.den.eval_at(q0)
        if d == 0:
            raise ZeroDivisionError(f"q = {q0} is a pole of {self}")
        return self.num.eval_at(q0) / d

    # -- comparison, hashing, display ------------------------------------

    def __eq__(self, other):
        if not isinstance(other, QScalar):
            if isinstance(other, (int, Fraction, LaurentPoly)):
                other = as_scalar(other)
            else:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        return f"QScalar({self})"

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if self.num.nterms() > 1 or ns.startswith("-") or "*" in ns:
            ns = f"({ns})"
        if self.den.nterms() > 1 or "*" in ds or "/" in ds or "^" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        def enc(p):
            return [[k, f"{v.numerator}/{v.denominator}"] for k, v in p.items()]

        return {"num": enc(self.num), "den": enc(self.den)}

    @classmethod
    def from_json(cls, obj) -> "QScalar":
        def dec(rows):
            return LaurentPoly({int(k): Fraction(v) for k, v in rows})

        return cls(dec(obj["num"]), dec(obj["den"]))


_ONE_POLY = LaurentPoly.const(1)


def _canonical(num: LaurentPoly, den: LaurentPoly):
    if num.is_zero():
        return LaurentPoly._raw({}), _ONE_POLY
    if den.is_monomial():
        (k, v), = den._c.items()
        if k == 0 and v == 1:
            return num, den
        inv = 1 / Fraction(v)
        return LaurentPoly._raw({e - k: c * inv for e, c in num._c.items()}), _ONE_POLY
    dlo, dd = den._dense()
    nlo, nd = num._dense()
    g = _poly_gcd(nd, dd)
    if len(g) > 1:
        nd, _ = _poly_divmod(nd, g)
        dd, _ = _poly_divmod(dd, g)
    lead = dd[-1]
    if lead != 1:
        nd = [c / lead for c in nd]
        dd = [c / lead for c in dd]
    return LaurentPoly._from_dense(nd, nlo - dlo), LaurentPoly._from_dense(dd)


ZERO = QScalar._raw(LaurentPoly._raw({}), _ONE_POLY)
ONE = QScalar._raw(_ONE_POLY, _ONE_POLY)
Q = QScalar._raw(LaurentPoly.monomial(1), _ONE_POLY)


def as_scalar(x) -> QScalar:
    if isinstance(x, QScalar):
        return x
    if isinstance(x, LaurentPoly):
        return QScalar._raw(x, _ONE_POLY)
    if isinstance(x, (int, Fraction, str)):
        return QScalar._raw(LaurentPoly.const(_frac(x)), _ONE_POLY)
    raise TypeError(f"cannot interpret {type(x).__name__} as an element of Q(q)")


def qpow(k: int, coeff=1) -> QScalar:
    """coeff * q^k."""
    return QScalar._raw(LaurentPoly.monomial(k, coeff), _ONE_POLY)


@lru_cache(maxsize=None)
def qint(n: int) -> QScalar:
    """Symmetric q-integer [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"qint needs a positive integer, got {n!r}")
    return QScalar._raw(LaurentPoly({n - 1 - 2 * k: 1 for k in range(n)}), _ONE_POLY)


def qbinom(n: int, i: int, base) -> QScalar:
    """Gaussian binomial coefficient [n choose i] in the variable ``base``.

    Built from the Pascal recurrence so that it is a polynomial in ``base``
    even when ``base`` specializes to 1.
    """
    if n < 0 or i < 0:
        raise ValueError("qbinom requires nonnegative n and i")
    if i > n:
        return ZERO
    base = as_scalar(base)
    i = min(i, n - i)
    # row[k] = [m choose k]; [m, k] = [m-1, k-1] + base^k [m-1, k]
    row = [ONE] + [ZERO] * i
    powers = [ONE]
    for _ in range(i):
        powers.append(powers[-1] * base)
    for m in range(1, n + 1):
        for k in range(min(m, i), 0, -1):
            row[k] = row[k - 1] + powers[k] * row[k]
    return row[i]
