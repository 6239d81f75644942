"""Hall-Littlewood vertex operators.

``B_l = sum_i h_{i+l} . s_i[X(t-1)]^perp`` acts on Schur-basis functions.
Multi-row operators ``B_v`` for any integer vector ``v`` are defined by the
raising-operator product ``prod_{i<j} (1 - t e_ij) B_{v_1} ... B_{v_L}``,
expanded one row at a time.  Both are linear and cached on Schur basis
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from .partitions import Partition, partitions_list, partitions_upto, strip
from .schur import pieri_h_shapes, plethystic_perp_terms
from .symfunc import SymFunc, Terms, add_into, add_unit
from .tpoly import ONE, T, TPoly

MAX_VECTOR_LENGTH = 8


@lru_cache(maxsize=None)
def _b_int(l: int, lam: Partition) -> tuple[tuple[Partition, TPoly], ...]:
    acc: Terms = {}
    for i in range(max(0, -l), sum(lam) + 1):
        for mu, c in plethystic_perp_terms(i, lam):
            for nu in pieri_h_shapes(mu, i + l):
                add_unit(acc, nu, c)
    return tuple(acc.items())


def apply_B_int(l: int, f: SymFunc) -> SymFunc:
    """Apply the single-row vertex operator ``B_l``."""
    acc: Terms = {}
    for lam, c in f.terms.items():
        add_into(acc, dict(_b_int(l, lam)), c)
    return SymFunc.wrap(acc)


@lru_cache(maxsize=None)
def _first_row_shifts(L: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """For rows 2..L: (|S|, indicator of S) over subsets S, i.e. the e_1j choices."""
    out = []
    for size in range(L):
        for S in combinations(range(L - 1), size):
            ind = [0] * (L - 1)
            for j in S:
                ind[j] = 1
            out.append((size, tuple(ind)))
    return tuple(out)


@lru_cache(maxsize=None)
def _b_vec(v: tuple[int, ...], lam: Partition) -> tuple[tuple[Partition, TPoly], ...]:
    L = len(v)
    if L == 0:
        return ((lam, ONE),)
    if L == 1:
        return _b_int(v[0], lam)
    head, tail = v[0], v[1:]
    acc: Terms = {}
    for size, ind in _first_row_shifts(L):
        inner = _b_vec(tuple(x - d for x, d in zip(tail, ind)), lam)
        if not inner:
            continue
        coeff = TPoly.monomial(size, -1 if size & 1 else 1)
        row = head + size
        for mu, c in inner:
            add_into(acc, dict(_b_int(row, mu)), c * coeff)
    return tuple(acc.items())


def apply_B_vector(v: Sequence[int], f: SymFunc) -> SymFunc:
    """Apply ``B_v``; zero entries of ``v`` are significant."""
    v = tuple(int(x) for x in v)
    if len(v) > MAX_VECTOR_LENGTH:
        raise ValueError(f"operator index longer than {MAX_VECTOR_LENGTH}")
    acc: Terms = {}
    for lam, c in f.terms.items():
        add_into(acc, dict(_b_vec(v, lam)), c)
    return SymFunc.wrap(acc)


def apply_B_sequence(indices: Iterable[Sequence[int]], f: SymFunc) -> SymFunc:
    """``B_{v1} B_{v2} ... f``, applied right to left."""
    for v in reversed(list(indices)):
        f = apply_B_vector(v, f)
    return f


@lru_cache(maxsize=None)
def hall_littlewood(lam: Partition) -> SymFunc:
    """``H_lam[X;t]`` in the Schur basis, built row by row from the bottom."""
    lam = strip(tuple(lam))
    f = SymFunc.one()
    for part in reversed(lam):
        f = apply_B_int(part, f)
    return f


def kostka_foulkes(mu: Partition, lam: Partition) -> TPoly:
    """Coefficient of ``s_mu`` in ``H_lam``."""
    if sum(mu) != sum(lam):
        raise ValueError("Kostka-Foulkes polynomials need partitions of equal size")
    return hall_littlewood(strip(lam)).coefficient(strip(mu))


@lru_cache(maxsize=None)
def kostka_foulkes_matrix(n: int):
    """``(parts, K)`` with ``K[i][j] = K_{parts[i], parts[j]}(t)``."""
    parts = partitions_list(n)
    K = tuple(tuple(kostka_foulkes(mu, lam) for lam in parts) for mu in parts)
    return parts, K


def hl_coordinates(f: SymFunc) -> SymFunc:
    """Expand a Schur-basis function in the Hall-Littlewood basis.

    ``H_lam = s_lam + (terms dominating lam)``, so eliminating the lowest
    term in lexicographic order always terminates.
    """
    if f.basis != "s":
        raise ValueError("expected a Schur-basis function")
    rest = dict(f.terms)
    out: Terms = {}
    while rest:
        lam = min(rest, key=lambda p: (sum(p), p))
        c = rest[lam]
        out[lam] = c
        add_into(rest, hall_littlewood(lam).terms, -c)
    return SymFunc.wrap(out, "H")


def from_hl(f: SymFunc) -> SymFunc:
    if f.basis != "H":
        raise ValueError("expected an H-basis function")
    acc: Terms = {}
    for lam, c in f.terms.items():
        add_into(acc, hall_littlewood(lam).terms, c)
    return SymFunc.wrap(acc)


def hl_test_set(D: int) -> list[SymFunc]:
    """``1`` and every ``H_sigma`` with ``|sigma| <= D``; spans degrees 0..D."""
    return [hall_littlewood(sig) for sig in partitions_upto(D)]


def clear_caches() -> None:
    for fn in (_b_int, _b_vec, hall_littlewood, kostka_foulkes_matrix):
        fn.cache_clear()


# ---------------------------------------------------------------------------
# operator expressions


class OpExpr:
    """A linear operator on Schur-basis functions.

    ``A * B`` composes (B acts first), ``A + B`` adds, ``c * A`` scales by a
    polynomial in t.
    """

    def __call__(self, f: SymFunc) -> SymFunc:
        raise NotImplementedError

    def __mul__(self, other):
        if isinstance(other, OpExpr):
            return Compose((self, other))
        if isinstance(other, (int, TPoly)):
            return Compose((Scale(TPoly.coerce(other)), self))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, TPoly)):
            return Compose((Scale(TPoly.coerce(other)), self))
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, OpExpr):
            return NotImplemented
        return Sum((self, other))

    def __sub__(self, other):
        if not isinstance(other, OpExpr):
            return NotImplemented
        return Sum((self, Compose((Scale(-ONE), other))))

    def __neg__(self):
        return Compose((Scale(-ONE), self))


@dataclass(frozen=True)
class BInt(OpExpr):
    l: int

    def __call__(self, f):
        return apply_B_int(self.l, f)

    def __str__(self):
        return f"B{self.l}"


@dataclass(frozen=True)
class BVector(OpExpr):
    v: tuple[int, ...]

    def __call__(self, f):
        return apply_B_vector(self.v, f)

    def __str__(self):
        return "B(" + ",".join(map(str, self.v)) + ")"


@dataclass(frozen=True)
class Scale(OpExpr):
    c: TPoly

    def __call__(self, f):
        return f.scale(self.c)

    def __str__(self):
        return f"[{self.c.pretty()}]"


@dataclass(frozen=True)
class Compose(OpExpr):
    factors: tuple[OpExpr, ...]

    def __call__(self, f):
        for op in reversed(self.factors):
            f = op(f)
        return f

    def __str__(self):
        return " ".join(map(str, self.factors))


@dataclass(frozen=True)
class Sum(OpExpr):
    summands: tuple[OpExpr, ...]

    def __call__(self, f):
        acc: Terms = {}
        for op in self.summands:
            add_into(acc, op(f).terms)
        return SymFunc.wrap(acc)

    def __str__(self):
        return " + ".join(f"({op})" for op in self.summands)


def B(*index: int) -> OpExpr:
    """``B(2)`` is the single-row operator, ``B(2, 1)`` the vector-indexed one."""
    return BInt(index[0]) if len(index) == 1 else BVector(tuple(index))


def t_pow(k: int) -> TPoly:
    return TPoly.monomial(k)


def commutation_rhs(m: int, n: int) -> OpExpr:
    """``t B_n B_m + t B_{m+1} B_{n-1} - B_{n-1} B_{m+1}``."""
    return T * (BInt(n) * BInt(m)) + T * (BInt(m + 1) * BInt(n - 1)) - BInt(n - 1) * BInt(m + 1)
