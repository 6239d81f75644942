"""Brute-force reference computations.

Nothing here touches Pieri rules, Jacobi-Trudi or the vertex operators,
so these can check the main engine independently.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .partitions import Partition, distinct_permutations, pad, partitions_list, strip, z
from .symfunc import SymFunc, Terms, add_unit
from .tpoly import TPoly


@lru_cache(maxsize=None)
def kostka_ssyt(lam: Partition, mu: Partition) -> int:
    """Count semistandard tableaux of shape ``lam`` and content ``mu`` by direct filling."""
    lam, mu = strip(lam), strip(mu)
    if sum(lam) != sum(mu):
        return 0
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    grid: dict[tuple[int, int], int] = {}
    left = list(mu)

    def fill(n: int) -> int:
        if n == len(cells):
            return 1
        i, j = cells[n]
        lo = 0
        if j:
            lo = max(lo, grid[(i, j - 1)])
        if i:
            lo = max(lo, grid[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, len(left)):
            if left[v]:
                left[v] -= 1
                grid[(i, j)] = v
                total += fill(n + 1)
                left[v] += 1
        grid.pop((i, j), None)
        return total

    return fill(0)


@lru_cache(maxsize=None)
def monomial_product(alpha: Partition, beta: Partition) -> tuple[tuple[Partition, int], ...]:
    """``m_alpha * m_beta`` in the monomial basis by counting exponent pairs."""
    n = len(alpha) + len(beta)
    a_perms = list(distinct_permutations(pad(alpha, n)))
    b_perms = list(distinct_permutations(pad(beta, n)))
    out: Counter = Counter()
    for a in a_perms:
        for b in b_perms:
            s = tuple(x + y for x, y in zip(a, b))
            if all(s[i] >= s[i + 1] for i in range(n - 1)):
                out[strip(s)] += 1
    return tuple(sorted(out.items()))


def schur_to_monomial_oracle(lam: Partition) -> dict[Partition, int]:
    return {mu: c for mu in partitions_list(sum(lam)) if (c := kostka_ssyt(lam, mu))}


def monomial_to_schur_oracle(f: dict[Partition, int]) -> dict[Partition, int]:
    """Invert the SSYT Kostka matrix by peeling off dominant terms."""
    rest = Counter(f)
    out: dict[Partition, int] = {}
    while True:
        rest = Counter({k: v for k, v in rest.items() if v})
        if not rest:
            return out
        lam = max(rest, key=lambda p: (sum(p), p))
        c = rest[lam]
        out[lam] = c
        for mu, d in schur_to_monomial_oracle(lam).items():
            rest[mu] -= c * d


def schur_product_oracle(lam: Partition, mu: Partition) -> dict[Partition, int]:
    """``s_lam * s_mu`` through monomial expansions and convolution."""
    prod_m: Counter = Counter()
    for a, ca in schur_to_monomial_oracle(lam).items():
        for b, cb in schur_to_monomial_oracle(mu).items():
            for g, cg in monomial_product(a, b):
                prod_m[g] += ca * cb * cg
    return monomial_to_schur_oracle(prod_m)


@lru_cache(maxsize=None)
def character(lam: Partition, rho: Partition) -> int:
    """Symmetric group character via Murnaghan-Nakayama on beta numbers."""
    lam, rho = strip(lam), strip(rho)
    if sum(lam) != sum(rho):
        raise ValueError("size mismatch")
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    bset = set(beta)
    total = 0
    for j, b in enumerate(beta):
        nb = b - r
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted(beta[:j] + [nb] + beta[j + 1:], reverse=True)
        mu = strip(tuple(new[i] - (L - 1 - i) for i in range(L)))
        total += (-1) ** height * character(mu, rest)
    return total


def hook_plethysm_oracle(i: int) -> SymFunc:
    """``s_i[X(t-1)]`` from the power-sum expansion with ``p_k -> (t**k - 1) p_k``."""
    if i == 0:
        return SymFunc.one()
    acc: dict[Partition, list[Fraction]] = {}
    for rho in partitions_list(i):
        # prod_j (t**rho_j - 1) / z_rho
        poly = [Fraction(1)]
        for part in rho:
            nxt = [Fraction(0)] * (len(poly) + part)
            for d, c in enumerate(poly):
                nxt[d] -= c
                nxt[d + part] += c
            poly = nxt
        scale = Fraction(1, z(rho))
        for lam in partitions_list(i):
            chi = character(lam, rho)
            if not chi:
                continue
            row = acc.setdefault(lam, [Fraction(0)] * (i + 1))
            for d, c in enumerate(poly):
                row[d] += c * scale * chi
    terms: Terms = {}
    for lam, row in acc.items():
        if any(c.denominator != 1 for c in row):
            raise ArithmeticError("non-integral plethysm coefficient")
        p = TPoly(int(c) for c in row)
        if p:
            add_unit(terms, lam, p)
    return SymFunc.wrap(terms)


def monomial_eval(lam: Partition, points) -> Fraction:
    """``m_lam(x_1, ..., x_n)`` summed over distinct exponent rearrangements."""
    n = len(points)
    if len(strip(lam)) > n:
        return Fraction(0)
    total = Fraction(0)
    for e in distinct_permutations(pad(lam, n)):
        term = Fraction(1)
        for x, k in zip(points, e):
            term *= Fraction(x) ** k
        total += term
    return total


def brute_force_partitions(n: int) -> list[Partition]:
    """Partitions of ``n`` from all weakly decreasing tuples, for cross-checking enumeration."""
    out = set()
    for L in range(n + 1):
        for v in product(range(1, n + 1), repeat=L):
            if sum(v) == n and all(v[i] >= v[i + 1] for i in range(L - 1)):
                out.add(v)
    return sorted(out, reverse=True)
