"""The subspaces spanned by k-bounded Hall-Littlewood polynomials.

Covers k-split polynomials ``G^(k)``, coordinates in the G basis, the
projections ``T_j^(k)``, k-Schur functions, the action of k-rectangle
operators and reduction to irreducible k-Schur functions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import (
    Partition,
    contained_rectangles,
    is_k_bounded,
    is_k_irreducible,
    k_bounded_partitions,
    k_split,
    strip,
)
from .symfunc import SymFunc, Terms, add_into
from .tpoly import (
    NonUnitDiagonal,
    ONE,
    TPoly,
    ZERO,
    triangular_solve_rat,
    unitriangular_solve,
)
from .vertex import apply_B_int, apply_B_sequence, apply_B_vector, from_hl, hl_coordinates

log = logging.getLogger(__name__)

# (k, degree) pairs whose G-transition matrix needed the rational fallback
FALLBACK_EVENTS: list[tuple[int, int]] = []


class NotInSpace(ValueError):
    """The function is not in the span of the k-bounded basis."""

    def __init__(self, k: int, residual: SymFunc):
        super().__init__(f"not in the k={k} subspace; residual {residual.pretty()}")
        self.k = k
        self.residual = residual


def _first(lam: Partition) -> int:
    return lam[0] if lam else 0


def _check_k(lam: Partition, k: int) -> Partition:
    lam = strip(tuple(lam))
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_k_bounded(lam, k):
        raise ValueError(f"{lam} is not {k}-bounded")
    return lam


@lru_cache(maxsize=None)
def g_poly(lam: Partition, k: int) -> SymFunc:
    """The k-split polynomial: block operators of the k-split applied to 1."""
    lam = _check_k(lam, k)
    return apply_B_sequence(k_split(lam, k), SymFunc.one())


@dataclass(frozen=True)
class GBasisTable:
    k: int
    degree: int
    parts: tuple[Partition, ...]  # k-bounded, descending lex
    g: dict  # Partition -> SymFunc (Schur basis)
    matrix: tuple[tuple[TPoly, ...], ...]  # matrix[i][j] = [H_{parts[i]}] G_{parts[j]}
    upper_triangular: bool
    diagonal: tuple[TPoly, ...] = field(default=())

    @property
    def unit_diagonal(self) -> bool:
        return all(d == ONE for d in self.diagonal)


@lru_cache(maxsize=None)
def g_table(k: int, n: int) -> GBasisTable:
    parts = k_bounded_partitions(n, k)
    index = {lam: i for i, lam in enumerate(parts)}
    g = {lam: g_poly(lam, k) for lam in parts}
    cols = []
    for lam in parts:
        coords = hl_coordinates(g[lam])
        col = [ZERO] * len(parts)
        for mu, c in coords.terms.items():
            if mu not in index:
                raise NotInSpace(k, from_hl(SymFunc.wrap({mu: c}, "H")))
            col[index[mu]] = c
        cols.append(col)
    matrix = tuple(tuple(cols[j][i] for j in range(len(parts))) for i in range(len(parts)))
    upper = all(not matrix[i][j] for i in range(len(parts)) for j in range(i))
    diagonal = tuple(matrix[i][i] for i in range(len(parts)))
    return GBasisTable(k, n, parts, g, matrix, upper, diagonal)


def _expand_component(f: SymFunc, k: int, n: int) -> Terms:
    coords = hl_coordinates(f)
    bad = {lam: c for lam, c in coords.terms.items() if not is_k_bounded(lam, k)}
    if bad:
        raise NotInSpace(k, from_hl(SymFunc.wrap(bad, "H")))
    table = g_table(k, n)
    b = [coords.coefficient(lam) for lam in table.parts]
    if not table.upper_triangular:
        raise ArithmeticError(f"G transition matrix for k={k}, degree {n} is not triangular")
    try:
        x = unitriangular_solve(table.matrix, b)
    except NonUnitDiagonal:
        FALLBACK_EVENTS.append((k, n))
        log.warning("non-unit diagonal in G table k=%d degree=%d; solving over Q(t)", k, n)
        xr = triangular_solve_rat(table.matrix, b)
        x = []
        for q in xr:
            p = q.as_poly()
            if p is None:
                raise ArithmeticError("G coordinates are not polynomial in t")
            x.append(p)
    return {lam: c for lam, c in zip(table.parts, x) if c}


def expand_in_G(f: SymFunc, k: int) -> SymFunc:
    """Coordinates of a Schur-basis function in the k-split basis.

    Raises :class:`NotInSpace` (carrying the residual) when ``f`` has a
    component outside the span of the k-bounded Hall-Littlewood functions.
    """
    if f.basis != "s":
        raise ValueError("expected a Schur-basis function")
    out: Terms = {}
    for n, comp in f.homogeneous_components().items():
        out.update(_expand_component(comp, k, n))
    return SymFunc.wrap(out, f"G({k})")


def in_k_space(f: SymFunc, k: int) -> bool:
    try:
        expand_in_G(f, k)
    except NotInSpace:
        return False
    return True


def from_G(f: SymFunc, k: int) -> SymFunc:
    acc: Terms = {}
    for lam, c in f.terms.items():
        add_into(acc, g_poly(lam, k).terms, c)
    return SymFunc.wrap(acc)


def project_T(j: int, k: int, f: SymFunc) -> SymFunc:
    """Keep the G-terms whose index has first part ``j``."""
    coords = expand_in_G(f, k)
    kept = SymFunc.wrap({lam: c for lam, c in coords.terms.items() if _first(lam) == j}, coords.basis)
    return from_G(kept, k)


def omega_membership(f: SymFunc, k: int) -> set[int]:
    """First parts occurring in the G-expansion of ``f``."""
    return {_first(lam) for lam in expand_in_G(f, k).terms}


def lambda_ak_membership(f: SymFunc, a: int, k: int) -> bool:
    """Whether every H-coordinate of ``f`` has first part in ``[a, k]``."""
    return all(a <= _first(lam) <= k for lam in hl_coordinates(f).terms)


# ---------------------------------------------------------------------------
# k-Schur functions


@lru_cache(maxsize=None)
def k_schur(lam: Partition, k: int) -> SymFunc:
    """``T_{lam_1} B_{lam_1}`` applied to the k-Schur function of the tail."""
    lam = _check_k(lam, k)
    if not lam:
        return SymFunc.one()
    inner = apply_B_int(lam[0], k_schur(lam[1:], k))
    return project_T(lam[0], k, inner)


@dataclass(frozen=True)
class KSchurTable:
    k: int
    degree: int
    functions: dict  # Partition -> SymFunc


@lru_cache(maxsize=None)
def kschur_table(k: int, n: int) -> KSchurTable:
    return KSchurTable(k, n, {lam: k_schur(lam, k) for lam in k_bounded_partitions(n, k)})


def triangular_coordinates(f: SymFunc, basis: dict, basis_tag: str) -> SymFunc:
    """Expand ``f`` in a basis whose element for ``lam`` is ``s_lam`` plus lex-higher terms."""
    rest = dict(f.terms)
    out: Terms = {}
    while rest:
        lam = min(rest, key=lambda p: (sum(p), p))
        elem = basis.get(lam)
        if elem is None:
            raise NotInSpace(-1, SymFunc.wrap(rest))
        lead = elem.coefficient(lam)
        if lead != ONE:
            raise NonUnitDiagonal(f"basis element {lam} has leading coefficient {lead!r}")
        c = rest[lam]
        out[lam] = c
        add_into(rest, elem.terms, -c)
    return SymFunc.wrap(out, basis_tag)


def expand_in_kschur(f: SymFunc, k: int, t_one: bool = False) -> SymFunc:
    """Coordinates in the k-Schur basis (optionally of its ``t = 1`` specialisation)."""
    basis = {}
    for n in f.degrees():
        for lam, g in kschur_table(k, n).functions.items():
            basis[lam] = g.at_t_one() if t_one else g
    try:
        return triangular_coordinates(f, basis, f"kschur({k})")
    except NotInSpace as exc:
        raise NotInSpace(k, exc.residual) from None


def from_kschur(f: SymFunc, k: int, t_one: bool = False) -> SymFunc:
    acc: Terms = {}
    for lam, c in f.terms.items():
        g = k_schur(lam, k)
        add_into(acc, (g.at_t_one() if t_one else g).terms, c)
    return SymFunc.wrap(acc)


# ---------------------------------------------------------------------------
# rectangles and irreducibles


def rectangle_exponent(rect: Partition, lam: Partition) -> int:
    """Power of t in ``B_rect s^(k)_lam = t^d s^(k)_{rect U lam}``."""
    l = rect[0]
    big = [p for p in lam if p > l]
    return sum(big) - len(big) * l


def reduce_to_irreducible(lam: Partition, k: int) -> tuple[int, list[Partition], Partition]:
    """Strip k-rectangles from ``lam``, widest first.

    Returns ``(c, [R_1, ..., R_j], mu)`` with ``mu`` k-irreducible and
    ``t**c * s^(k)_lam == B_{R_1} ... B_{R_j} s^(k)_mu``.
    """
    rem = list(_check_k(lam, k))
    c = 0
    rects: list[Partition] = []
    while True:
        found = contained_rectangles(tuple(rem), k)
        if not found:
            break
        rect = found[-1]
        for part in rect:
            rem.remove(part)
        c += rectangle_exponent(rect, tuple(rem))
        rects.append(rect)
    mu = tuple(rem)
    assert is_k_irreducible(mu, k)
    return c, rects, mu


def reconstruct(rects: list[Partition], mu: Partition, k: int) -> SymFunc:
    """``B_{R_1} ... B_{R_j} s^(k)_mu``."""
    return apply_B_sequence(rects, k_schur(mu, k))


def quotient_normal_form(f: SymFunc, k: int) -> SymFunc:
    """Drop the reducible terms of a k-Schur expansion (a ``t = 1`` computation).

    Schur-basis input is first expanded in the ``t = 1`` k-Schur basis.
    """
    tag = f"kschur({k})"
    if f.basis == "s":
        f = expand_in_kschur(f.at_t_one(), k, t_one=True)
    elif f.basis != tag:
        raise ValueError(f"expected basis {tag!r} or 's'")
    else:
        f = f.at_t_one()
    return SymFunc.wrap({lam: c for lam, c in f.terms.items() if is_k_irreducible(lam, k)}, tag)


def rectangle_operator(rect: Partition):
    return lambda f: apply_B_vector(rect, f)


def clear_caches() -> None:
    for fn in (g_poly, g_table, k_schur, kschur_table):
        fn.cache_clear()
    FALLBACK_EVENTS.clear()
