"""Exact arithmetic in Z[t] and Q(t).

``TPoly`` is the coefficient ring for every symmetric function in the
package.  ``TRat`` only exists for the rare case where a triangular solve
meets a non-unit pivot.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class TPoly:
    """Polynomial in ``t`` with arbitrary precision integer coefficients.

    Stored densely: ``c[i]`` is the coefficient of ``t**i``.  The zero
    polynomial is the empty tuple.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.c = _trim(coeffs)

    @classmethod
    def _raw(cls, c: tuple[int, ...]) -> "TPoly":
        obj = object.__new__(cls)
        obj.c = c
        return obj

    @classmethod
    def const(cls, n: int) -> "TPoly":
        return cls._raw((n,) if n else ())

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "TPoly":
        if power < 0:
            raise ValueError("negative power of t")
        if not coeff:
            return ZERO
        return cls._raw((0,) * power + (coeff,))

    @staticmethod
    def coerce(x) -> "TPoly":
        if isinstance(x, TPoly):
            return x
        if isinstance(x, int):
            return TPoly.const(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to TPoly")

    # -- inspection ---------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree in t; -1 for the zero polynomial."""
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_const(self) -> bool:
        return len(self.c) <= 1

    def constant(self) -> int:
        return self.c[0] if self.c else 0

    def eval_at_one(self) -> int:
        return sum(self.c)

    def __call__(self, t):
        acc = 0
        for a in reversed(self.c):
            acc = acc * t + a
        return acc

    def is_nonnegative(self) -> bool:
        """True when every coefficient is >= 0 (membership in N[t])."""
        return all(a >= 0 for a in self.c)

    # -- ring operations ----------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TPoly):
            if isinstance(other, int):
                other = TPoly.const(other)
            else:
                return NotImplemented
        a, b = self.c, other.c
        if not a:
            return other
        if not b:
            return self
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, x in enumerate(b):
            res[i] += x
        if len(a) == len(b):
            return TPoly(res)
        return TPoly._raw(tuple(res))

    __radd__ = __add__

    def __neg__(self):
        return TPoly._raw(tuple(-x for x in self.c))

    def __sub__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return TPoly._raw(tuple(x * other for x in self.c))
        if not isinstance(other, TPoly):
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return ZERO
        if len(b) == 1:
            return self * b[0]
        if len(a) == 1:
            return other * a[0]
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return TPoly._raw(tuple(res))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "TPoly":
        """Multiply by ``t**k`` (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.c or not k:
            return self
        return TPoly._raw((0,) * k + self.c)

    def divmod(self, other: "TPoly") -> tuple["TPoly", "TPoly"]:
        """Euclidean division over Z; raises if a quotient coefficient is not integral."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.c)
        db, lead = other.degree, other.c[-1]
        quo = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            a = rem[i]
            if not a:
                continue
            q, r = divmod(a, lead)
            if r:
                raise ArithmeticError("quotient not integral")
            quo[i - db] = q
            for j, y in enumerate(other.c):
                rem[i - db + j] -= q * y
        return TPoly(quo), TPoly(rem)

    def exact_divide(self, other: "TPoly") -> "TPoly | None":
        """``self / other`` when the division is exact in Z[t], else None."""
        try:
            q, r = self.divmod(other)
        except ArithmeticError:
            return None
        return q if r.is_zero() else None

    def content(self) -> int:
        g = 0
        for a in self.c:
            g = gcd(g, a)
        return g

    # -- comparison / hashing -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, TPoly):
            return self.c == other.c
        if isinstance(other, int):
            return self.c == ((other,) if other else ())
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return bool(self.c)

    # -- rendering ----------------------------------------------------
    def to_json(self) -> list[str]:
        return [str(a) for a in self.c]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "TPoly":
        return cls(int(a) for a in data)

    def __repr__(self):
        return f"TPoly({list(self.c)})"

    def pretty(self) -> str:
        if not self.c:
            return "0"
        sup = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            a = self.c[i]
            if not a:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                body = str(mag)
            else:
                tp = "t" if i == 1 else "t" + str(i).translate(sup)
                body = tp if mag == 1 else f"{mag}{tp}"
            parts.append((sign, body))
        s0, b0 = parts[0]
        out = ("-" if s0 == "-" else "") + b0
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __str__ = pretty


ZERO = TPoly._raw(())
ONE = TPoly._raw((1,))
T = TPoly._raw((0, 1))


def t_power(k: int) -> TPoly:
    return TPoly.monomial(k)


# ---------------------------------------------------------------------------
# Rational functions (fallback only)


def _primitive(p: TPoly) -> TPoly:
    g = p.content()
    if g in (0, 1):
        return p
    return TPoly._raw(tuple(a // g for a in p.c))


def _pseudo_rem(a: TPoly, b: TPoly) -> TPoly:
    rem = list(a.c)
    db, lead = b.degree, b.c[-1]
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        top = rem[-1]
        rem = [x * lead for x in rem]
        for j, y in enumerate(b.c):
            rem[shift + j] -= top * y
        rem = list(_trim(rem))
    return TPoly(rem)


def poly_gcd(a: TPoly, b: TPoly) -> TPoly:
    """Gcd in Z[t] via the primitive remainder sequence, normalised positive."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        ca, cb = a.content(), b.content()
        a, b = _primitive(a), _primitive(b)
        if a.degree < b.degree:
            a, b = b, a
        while not b.is_zero():
            a, b = b, _primitive(_pseudo_rem(a, b))
        g = _primitive(a) * gcd(ca, cb)
    if g.c and g.c[-1] < 0:
        g = -g
    return g


class TRat:
    """Reduced fraction of two ``TPoly`` values with positive leading denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        num, den = TPoly.coerce(num), TPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        num = num.exact_divide(g)
        den = den.exact_divide(g)
        if den.c[-1] < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @staticmethod
    def coerce(x) -> "TRat":
        return x if isinstance(x, TRat) else TRat(x)

    def __add__(self, other):
        o = TRat.coerce(other)
        return TRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return TRat(-self.num, self.den)

    def __sub__(self, other):
        return self + (-TRat.coerce(other))

    def __rsub__(self, other):
        return TRat.coerce(other) - self

    def __mul__(self, other):
        o = TRat.coerce(other)
        return TRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = TRat.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return TRat(self.num * o.den, self.den * o.num)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> TPoly | None:
        return self.num if self.den == ONE else None

    def __eq__(self, other):
        if isinstance(other, (TPoly, int)):
            other = TRat(other)
        if not isinstance(other, TRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"TRat({self.num!r}, {self.den!r})"


# ---------------------------------------------------------------------------
# Triangular solves


class NonUnitDiagonal(ValueError):
    """Raised by :func:`unitriangular_solve` when a pivot is not 1."""


def unitriangular_solve(M: Sequence[Sequence[TPoly]], b: Sequence[TPoly]) -> list[TPoly]:
    """Solve ``M x = b`` for upper unitriangular ``M`` by back substitution."""
    n = len(M)
    if len(b) != n or any(len(row) != n for row in M):
        raise ValueError("dimension mismatch")
    for i in range(n):
        for j in range(i):
            if TPoly.coerce(M[i][j]):
                raise ValueError(f"matrix not upper triangular at ({i}, {j})")
        if TPoly.coerce(M[i][i]) != ONE:
            raise NonUnitDiagonal(f"diagonal entry {i} is {M[i][i]!r}")
    x: list[TPoly] = [ZERO] * n
    for i in range(n - 1, -1, -1):
        acc = TPoly.coerce(b[i])
        for j in range(i + 1, n):
            mij = TPoly.coerce(M[i][j])
            if mij and x[j]:
                acc = acc - mij * x[j]
        x[i] = acc
    return x


def triangular_solve_rat(M: Sequence[Sequence], b: Sequence) -> list[TRat]:
    """Back substitution over Q(t) for upper triangular ``M`` with nonzero diagonal."""
    n = len(M)
    x: list[TRat] = [TRat(ZERO)] * n
    for i in range(n - 1, -1, -1):
        acc = TRat.coerce(TPoly.coerce(b[i]) if not isinstance(b[i], TRat) else b[i])
        for j in range(i + 1, n):
            mij = M[i][j]
            if mij:
                acc = acc - TRat.coerce(TPoly.coerce(mij) if not isinstance(mij, TRat) else mij) * x[j]
        piv = M[i][i]
        piv = piv if isinstance(piv, TRat) else TRat(TPoly.coerce(piv))
        x[i] = acc / piv
    return x


def matvec(M: Sequence[Sequence[TPoly]], x: Sequence[TPoly]) -> list[TPoly]:
    out = []
    for row in M:
        acc = ZERO
        for a, y in zip(row, x):
            if a and y:
                acc = acc + TPoly.coerce(a) * y
        out.append(acc)
    return out


def integer_unitriangular_inverse(M: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of an upper unitriangular integer matrix."""
    n = len(M)
    inv = [[0] * n for _ in range(n)]
    for i in range(n):
        if M[i][i] != 1:
            raise NonUnitDiagonal(f"diagonal entry {i} is {M[i][i]}")
    for col in range(n):
        inv[col][col] = 1
        for i in range(col - 1, -1, -1):
            s = 0
            for j in range(i + 1, col + 1):
                if M[i][j]:
                    s += M[i][j] * inv[j][col]
            inv[i][col] = -s
    return inv


def fraction_det(rows: list[list[Fraction]]) -> Fraction:
    """Determinant over Q by fraction-exact Gaussian elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        p = a[c][c]
        det *= p
        for r in range(c + 1, n):
            if a[r][c]:
                f = a[r][c] / p
                for j in range(c, n):
                    a[r][j] -= f * a[c][j]
    return det
