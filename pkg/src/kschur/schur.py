"""The ring of symmetric functions in the Schur basis.

Products go through Jacobi-Trudi (Schur to complete homogeneous) and
iterated Pieri rules; skewing operators are the transposed Pieri rules.
Everything is cached per partition, so repeated calls are cheap.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from .partitions import (
    IntVector,
    Partition,
    conjugate,
    partitions_list,
    strip,
)
from .symfunc import SymFunc, Terms, add_into, add_unit
from .tpoly import ONE, TPoly, fraction_det, integer_unitriangular_inverse

# ---------------------------------------------------------------------------
# straightening


class Straightened(NamedTuple):
    sign: int
    parts: IntVector  # full length; may end in zeros or negative entries

    @property
    def negative_tail(self) -> bool:
        return bool(self.parts) and self.parts[-1] < 0

    @property
    def partition(self) -> Partition | None:
        """Canonical partition, or None for a negative tail."""
        return None if self.negative_tail else strip(self.parts)


def straighten(v: Sequence[int]) -> Straightened | None:
    """Rewrite an integer vector index as ``sign * (partition index)``.

    Returns None when the index is identically zero, i.e. ``v + delta`` has a
    repeated entry.  The result keeps the length of ``v``.
    """
    n = len(v)
    u = [v[i] + n - 1 - i for i in range(n)]
    if len(set(u)) < n:
        return None
    inversions = sum(1 for i in range(n) for j in range(i + 1, n) if u[i] < u[j])
    u.sort(reverse=True)
    parts = tuple(u[i] - (n - 1 - i) for i in range(n))
    return Straightened(-1 if inversions & 1 else 1, parts)


def schur_vector(v: Sequence[int]) -> SymFunc:
    """``s_v`` for an arbitrary integer vector, as a Schur function."""
    st = straighten(v)
    if st is None or st.negative_tail:
        return SymFunc.zero()
    return SymFunc.wrap({st.partition: TPoly.const(st.sign)})


def s(*parts: int) -> SymFunc:
    """Shorthand: ``s(2, 1)`` is the Schur function s_{21}."""
    return SymFunc.basis_element(parts)


# ---------------------------------------------------------------------------
# Pieri rules and their transposes (all coefficients are 1)


@lru_cache(maxsize=None)
def pieri_h_shapes(lam: Partition, r: int) -> tuple[Partition, ...]:
    """Shapes obtained from ``lam`` by adding a horizontal r-strip."""
    if r < 0:
        return ()
    lam = strip(lam)
    n = len(lam)
    out: list[Partition] = []

    def rec(i: int, rem: int, acc: list[int]):
        if i == n:
            if rem <= (lam[-1] if n else rem):
                out.append(strip(tuple(acc) + (rem,)))
            return
        hi = rem if i == 0 else min(rem, lam[i - 1] - lam[i])
        for add in range(hi, -1, -1):
            acc.append(lam[i] + add)
            rec(i + 1, rem - add, acc)
            acc.pop()

    rec(0, r, [])
    return tuple(out)


@lru_cache(maxsize=None)
def pieri_e_shapes(lam: Partition, r: int) -> tuple[Partition, ...]:
    return tuple(conjugate(m) for m in pieri_h_shapes(conjugate(lam), r))


@lru_cache(maxsize=None)
def skew_h_shapes(lam: Partition, r: int) -> tuple[Partition, ...]:
    """Shapes ``mu`` with ``lam / mu`` a horizontal r-strip."""
    if r < 0:
        return ()
    n = len(lam)
    out: list[Partition] = []

    def rec(i: int, rem: int, acc: list[int]):
        if i == n:
            if rem == 0:
                out.append(strip(tuple(acc)))
            return
        lo = lam[i + 1] if i + 1 < n else 0
        for take in range(0, min(lam[i] - lo, rem) + 1):
            acc.append(lam[i] - take)
            rec(i + 1, rem - take, acc)
            acc.pop()

    rec(0, r, [])
    return tuple(out)


@lru_cache(maxsize=None)
def skew_e_shapes(lam: Partition, r: int) -> tuple[Partition, ...]:
    return tuple(conjugate(m) for m in skew_h_shapes(conjugate(lam), r))


def _termwise(f: SymFunc, shapes) -> SymFunc:
    acc: Terms = {}
    for lam, c in f.terms.items():
        for mu in shapes(lam):
            add_unit(acc, mu, c)
    return SymFunc.wrap(acc, f.basis)


def pieri_h(lam: Partition, r: int) -> SymFunc:
    return SymFunc.wrap({mu: ONE for mu in pieri_h_shapes(strip(lam), r)})


def pieri_e(lam: Partition, r: int) -> SymFunc:
    return SymFunc.wrap({mu: ONE for mu in pieri_e_shapes(strip(lam), r)})


def perp_h(r: int, f: SymFunc) -> SymFunc:
    return _termwise(f, lambda lam: skew_h_shapes(lam, r))


def perp_e(r: int, f: SymFunc) -> SymFunc:
    return _termwise(f, lambda lam: skew_e_shapes(lam, r))


# ---------------------------------------------------------------------------
# Jacobi-Trudi and products


@lru_cache(maxsize=None)
def schur_in_h(mu: Partition) -> dict[Partition, int]:
    """Coefficients of ``s_mu`` in the h-basis, from the Jacobi-Trudi determinant."""
    mu = strip(mu)
    L = len(mu)
    out: dict[Partition, int] = {}

    def rec(i: int, used: int, sign: int, idx: list[int]):
        if i == L:
            key = tuple(sorted((x for x in idx if x), reverse=True))
            out[key] = out.get(key, 0) + sign
            return
        # column j contributes h_{mu_i - i + j}; track permutation sign by inversions
        for j in range(L):
            if used >> j & 1:
                continue
            d = mu[i] - i + j
            if d < 0:
                continue
            inv = bin(used >> (j + 1)).count("1")
            idx.append(d)
            rec(i + 1, used | (1 << j), -sign if inv & 1 else sign, idx)
            idx.pop()

    rec(0, 0, 1, [])
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def h_times_s(alpha: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    """``h_alpha * s_nu`` in the Schur basis by iterated Pieri."""
    if not alpha:
        return ((nu, 1),)
    acc: dict[Partition, int] = {}
    for lam, c in h_times_s(alpha[1:], nu):
        for mu in pieri_h_shapes(lam, alpha[0]):
            acc[mu] = acc.get(mu, 0) + c
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def _mul_ss(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    acc: dict[Partition, int] = {}
    for alpha, c in schur_in_h(mu).items():
        for lam, d in h_times_s(alpha, nu):
            acc[lam] = acc.get(lam, 0) + c * d
    return tuple((k, v) for k, v in acc.items() if v)


def schur_product(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``s_mu * s_nu``; the factor with fewer rows goes through Jacobi-Trudi."""
    mu, nu = strip(mu), strip(nu)
    if (len(mu), mu) > (len(nu), nu):
        mu, nu = nu, mu
    return dict(_mul_ss(mu, nu))


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    if f.basis != "s" or g.basis != "s":
        raise ValueError("multiply works in the Schur basis")
    acc: Terms = {}
    for mu, a in f.terms.items():
        for nu, b in g.terms.items():
            ab = a * b
            for lam, c in schur_product(mu, nu).items():
                add_unit(acc, lam, ab * c)
    return SymFunc.wrap(acc)


@lru_cache(maxsize=None)
def _perp_h_seq(alpha: Partition, lam: Partition) -> tuple[tuple[Partition, int], ...]:
    if not alpha:
        return ((lam, 1),)
    acc: dict[Partition, int] = {}
    for mu, c in _perp_h_seq(alpha[1:], lam):
        for nu in skew_h_shapes(mu, alpha[0]):
            acc[nu] = acc.get(nu, 0) + c
    return tuple((k, v) for k, v in acc.items() if v)


@lru_cache(maxsize=None)
def skew_schur(lam: Partition, mu: Partition) -> tuple[tuple[Partition, int], ...]:
    """``s_mu^perp s_lam`` (the skew Schur function lam/mu) in the Schur basis."""
    acc: dict[Partition, int] = {}
    for alpha, c in schur_in_h(mu).items():
        for nu, d in _perp_h_seq(alpha, lam):
            acc[nu] = acc.get(nu, 0) + c * d
    return tuple((k, v) for k, v in acc.items() if v)


def perp_s(mu: Sequence[int], f: SymFunc) -> SymFunc:
    """Adjoint of multiplication by ``s_mu``; a vector index is straightened first."""
    st = straighten(tuple(mu))
    if st is None or st.negative_tail:
        return SymFunc.zero()
    sign, mu = st.sign, st.partition
    acc: Terms = {}
    for lam, c in f.terms.items():
        for nu, d in skew_schur(lam, mu):
            add_unit(acc, nu, c * (sign * d))
    return SymFunc.wrap(acc)


def perp(g: SymFunc, f: SymFunc) -> SymFunc:
    """``g^perp f`` for ``g`` in the Schur basis (coefficients may involve t)."""
    acc: Terms = {}
    for mu, c in g.terms.items():
        add_into(acc, perp_s(mu, f).terms, c)
    return SymFunc.wrap(acc)


# ---------------------------------------------------------------------------
# Kostka matrices and basis changes


@lru_cache(maxsize=None)
def h_in_schur(mu: Partition) -> dict[Partition, int]:
    return dict(h_times_s(strip(mu), ()))


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if sum(lam) != sum(mu):
        raise ValueError("Kostka numbers need partitions of equal size")
    return h_in_schur(strip(mu)).get(strip(lam), 0)


@lru_cache(maxsize=None)
def kostka_matrix(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """``(parts, K)`` with ``K[i][j] = K_{parts[i], parts[j]}``; upper unitriangular."""
    parts = partitions_list(n)
    K = tuple(tuple(kostka(lam, mu) for mu in parts) for lam in parts)
    return parts, K


@lru_cache(maxsize=None)
def inverse_kostka(n: int) -> tuple[tuple[Partition, ...], tuple[tuple[int, ...], ...]]:
    """``(parts, Kinv)`` with ``m_lam = sum_mu Kinv[lam][mu] s_mu``."""
    parts, K = kostka_matrix(n)
    inv = integer_unitriangular_inverse(K)
    return parts, tuple(tuple(r) for r in inv)


@lru_cache(maxsize=None)
def _kinv_row(lam: Partition) -> dict[Partition, int]:
    parts, Kinv = inverse_kostka(sum(lam))
    i = parts.index(lam)
    return {mu: Kinv[i][j] for j, mu in enumerate(parts) if Kinv[i][j]}


def inverse_kostka_entry(lam: Partition, mu: Partition) -> int:
    lam, mu = strip(lam), strip(mu)
    if sum(lam) != sum(mu):
        return 0
    return _kinv_row(lam).get(mu, 0)


@lru_cache(maxsize=None)
def e_in_schur(mu: Partition) -> dict[Partition, int]:
    acc: dict[Partition, int] = {(): 1}
    for r in mu:
        nxt: dict[Partition, int] = {}
        for lam, c in acc.items():
            for nu in pieri_e_shapes(lam, r):
                nxt[nu] = nxt.get(nu, 0) + c
        acc = nxt
    return {k: v for k, v in acc.items() if v}


def to_schur(f: SymFunc) -> SymFunc:
    """Convert from the m, h or e basis to the Schur basis."""
    if f.basis == "s":
        return f
    table = {"m": _kinv_row, "h": h_in_schur, "e": e_in_schur}.get(f.basis)
    if table is None:
        raise ValueError(f"no conversion from basis {f.basis!r}")
    acc: Terms = {}
    for lam, c in f.terms.items():
        for mu, d in table(lam).items():
            add_unit(acc, mu, c * d)
    return SymFunc.wrap(acc)


def to_monomial(f: SymFunc) -> SymFunc:
    if f.basis != "s":
        raise ValueError("to_monomial expects the Schur basis")
    acc: Terms = {}
    for lam, c in f.terms.items():
        parts, K = kostka_matrix(sum(lam))
        i = parts.index(lam)
        for j, mu in enumerate(parts):
            if K[i][j]:
                add_unit(acc, mu, c * K[i][j])
    return SymFunc.wrap(acc, "m")


def scalar_product(f: SymFunc, g: SymFunc) -> TPoly:
    """Hall inner product, for which the Schur functions are orthonormal."""
    f, g = to_schur(f), to_schur(g)
    acc = TPoly()
    for lam, c in f.terms.items():
        d = g.terms.get(lam)
        if d is not None:
            acc = acc + c * d
    return acc


# ---------------------------------------------------------------------------
# evaluation in finitely many variables


def _complete_values(points: Sequence[Fraction], top: int) -> list[Fraction]:
    """``[h_0, ..., h_top]`` evaluated at ``points``."""
    h = [Fraction(1)] + [Fraction(0)] * top
    for x in points:
        for r in range(1, top + 1):
            h[r] = h[r] + x * h[r - 1]
    return h


def eval_schur(lam: Partition, points: Sequence) -> Fraction:
    """``s_lam(x_1, ..., x_m)`` by Jacobi-Trudi; zero when ``len(lam) > m``."""
    pts = [Fraction(x) for x in points]
    lam = strip(lam)
    if not lam:
        return Fraction(1)
    L = len(lam)
    h = _complete_values(pts, lam[0] + L)

    def H(r: int) -> Fraction:
        return h[r] if r >= 0 else Fraction(0)

    return fraction_det([[H(lam[i] - i + j) for j in range(L)] for i in range(L)])


def eval_in_vars(f: SymFunc, points: Sequence, t=None) -> Fraction:
    """Evaluate a Schur-basis function at the given exact points.

    Coefficients that depend on ``t`` need an explicit value for ``t``.
    """
    if f.basis != "s":
        f = to_schur(f)
    total = Fraction(0)
    for lam, c in f.terms.items():
        if t is None:
            if not c.is_const():
                raise ValueError("coefficients depend on t; pass a value for t")
            coeff = Fraction(c.constant())
        else:
            coeff = Fraction(c(Fraction(t)))
        if coeff:
            total += coeff * eval_schur(lam, points)
    return total


# ---------------------------------------------------------------------------
# the alphabet X(t - 1)


@lru_cache(maxsize=None)
def hook_plethysm(i: int) -> SymFunc:
    """``s_i[X(t-1)]`` in the Schur basis.

    Equals ``(t-1) * sum_{r=1..i} (-1)**(i-r) t**(r-1) s_{(r, 1^(i-r))}`` for i >= 1.
    """
    if i < 0:
        return SymFunc.zero()
    if i == 0:
        return SymFunc.one()
    tm1 = TPoly((-1, 1))
    terms: Terms = {}
    for r in range(1, i + 1):
        sign = -1 if (i - r) & 1 else 1
        terms[(r,) + (1,) * (i - r)] = TPoly.monomial(r - 1, sign) * tm1
    return SymFunc.wrap(terms)


@lru_cache(maxsize=None)
def plethystic_perp_terms(i: int, lam: Partition) -> tuple[tuple[Partition, TPoly], ...]:
    """``s_i[X(t-1)]^perp s_lam``.

    Uses ``s_i[X(t-1)] = sum_{a+b=i} t**a (-1)**b h_a e_b``, so the adjoint is
    a composite of strip removals.
    """
    acc: Terms = {}
    for b in range(i + 1):
        a = i - b
        coeff = TPoly.monomial(a, -1 if b & 1 else 1)
        for mu in skew_e_shapes(lam, b):
            for nu in skew_h_shapes(mu, a):
                add_unit(acc, nu, coeff)
    return tuple(acc.items())


def plethystic_perp(i: int, f: SymFunc) -> SymFunc:
    acc: Terms = {}
    for lam, c in f.terms.items():
        add_into(acc, dict(plethystic_perp_terms(i, lam)), c)
    return SymFunc.wrap(acc)
