"""Partition combinatorics.

Partitions are plain tuples of positive integers in weakly decreasing order,
with no trailing zeros.  Integer vectors (operator indices, padded views)
are plain tuples of any integers.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import accumulate
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

Partition = tuple[int, ...]
IntVector = tuple[int, ...]


def is_partition(v: Sequence[int]) -> bool:
    """Weakly decreasing and nonnegative (trailing zeros allowed)."""
    return all(x >= 0 for x in v) and all(v[i] >= v[i + 1] for i in range(len(v) - 1))


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return its canonical form."""
    p = tuple(int(x) for x in parts)
    if not is_partition(p):
        raise ValueError(f"not a partition: {p}")
    return strip(p)


def strip(v: Sequence[int]) -> tuple[int, ...]:
    """Drop trailing zeros."""
    n = len(v)
    while n and v[n - 1] == 0:
        n -= 1
    return tuple(v[:n])


def to_partition(v: Sequence[int]) -> Partition | None:
    """Canonical partition for ``v``, or None when ``v`` is not one."""
    return strip(v) if is_partition(v) else None


def pad(v: Sequence[int], n: int) -> IntVector:
    if len(v) > n:
        if any(v[n:]):
            raise ValueError(f"{tuple(v)} has more than {n} nonzero entries")
        return tuple(v[:n])
    return tuple(v) + (0,) * (n - len(v))


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def length(lam: Sequence[int]) -> int:
    """Number of nonzero parts."""
    return sum(1 for x in lam if x)


def last_part(lam: Partition) -> int:
    return lam[-1] if lam else 0


@lru_cache(maxsize=None)
def conjugate(lam: Partition) -> Partition:
    lam = strip(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    """``lam <= mu`` in dominance order; both must have the same size."""
    if size(lam) != size(mu):
        raise ValueError("dominance order compares partitions of equal size")
    n = max(len(lam), len(mu))
    a = accumulate(pad(lam, n))
    b = accumulate(pad(mu, n))
    return all(x <= y for x, y in zip(a, b))


def hook_length(lam: Partition, cell: tuple[int, int]) -> int:
    """Hook of the 1-indexed cell (row, column)."""
    i, j = cell
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"cell {cell} outside the diagram of {lam}")
    arm = lam[i - 1] - j
    leg = sum(1 for r in range(i, len(lam)) if lam[r] >= j)
    return arm + leg + 1


def main_hook(lam: Partition) -> int:
    lam = strip(lam)
    return lam[0] + len(lam) - 1 if lam else 0


def k_split(lam: Partition, k: int) -> tuple[Partition, ...]:
    """Cut ``lam`` top-down into blocks of main hook-length ``k``.

    The final block may be shorter.  ``k_split(lam, k) == (lam,)`` whenever
    ``main_hook(lam) <= k``.
    """
    lam = strip(lam)
    if k < 1:
        raise ValueError("k must be >= 1")
    if lam and lam[0] > k:
        raise ValueError(f"{lam} is not {k}-bounded")
    blocks: list[Partition] = []
    i = 0
    while i < len(lam):
        rows = k - lam[i] + 1
        blocks.append(lam[i:i + rows])
        i += rows
    return tuple(blocks)


def k_rectangles(k: int) -> list[Partition]:
    if k < 1:
        raise ValueError("k must be >= 1")
    return [(l,) * (k + 1 - l) for l in range(1, k + 1)]


def is_k_bounded(lam: Partition, k: int) -> bool:
    return not lam or lam[0] <= k


def is_k_irreducible(lam: Partition, k: int) -> bool:
    """At most ``i`` parts equal to ``k - i`` for i = 0..k-1."""
    if not is_k_bounded(lam, k):
        return False
    mult = Counter(lam)
    return all(mult[k - i] <= i for i in range(k))


def enumerate_k_irreducibles(k: int) -> list[Partition]:
    """All k-irreducible partitions, ordered by size then descending lex."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out: list[Partition] = [()]
    for v in range(k, 0, -1):
        out = [p + (v,) * m for p in out for m in range(k - v + 1)]
    return sorted(out, key=lambda p: (sum(p), tuple(-x for x in p)))


def contained_rectangles(lam: Partition, k: int) -> list[Partition]:
    """k-rectangles whose rows occur (as a multiset) in ``lam``."""
    mult = Counter(lam)
    return [r for r in k_rectangles(k) if mult[r[0]] >= len(r)]


# -- shape algebra -----------------------------------------------------------


def union(lam: Partition, mu: Partition) -> Partition:
    return tuple(sorted((x for x in lam + mu if x), reverse=True))


def concat(lam: Sequence[int], mu: Sequence[int]) -> IntVector:
    return tuple(lam) + tuple(mu)


def add(lam: Sequence[int], mu: Sequence[int]) -> IntVector:
    n = max(len(lam), len(mu))
    return tuple(a + b for a, b in zip(pad(lam, n), pad(mu, n)))


def sub(lam: Sequence[int], mu: Sequence[int]) -> IntVector:
    """Entrywise difference; check the result with :func:`to_partition`."""
    n = max(len(lam), len(mu))
    return tuple(a - b for a, b in zip(pad(lam, n), pad(mu, n)))


def reverse(mu: Sequence[int], m: int) -> IntVector:
    """Reverse reading of ``mu`` viewed with exactly ``m`` entries."""
    return tuple(reversed(pad(mu, m)))


def delta(n: int) -> IntVector:
    return tuple(range(n - 1, -1, -1))


def rectangle(a: int, n: int) -> IntVector:
    """The length-``n`` vector ``(a, ..., a)``; zeros are kept."""
    return (a,) * n


def multiplicities(lam: Partition) -> Counter:
    return Counter(x for x in lam if x)


def z(lam: Partition) -> int:
    """Centraliser order: prod_i i**m_i * m_i!."""
    return prod(i ** m * factorial(m) for i, m in multiplicities(lam).items())


# -- enumeration -------------------------------------------------------------


def partitions_in(n: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        return
    cap = n if max_part is None else min(max_part, n)
    lmax = n if max_len is None else max_len

    def rec(rem: int, cap: int, slots: int):
        if rem == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(cap, rem), 0, -1):
            if first * slots < rem:
                break
            for rest in rec(rem - first, first, slots - 1):
                yield (first,) + rest

    yield from rec(n, cap, lmax)


@lru_cache(maxsize=None)
def partitions_list(n: int, max_len: int | None = None, max_part: int | None = None) -> tuple[Partition, ...]:
    return tuple(partitions_in(n, max_len, max_part))


def partitions_upto(d: int, max_len: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of size 0..d, by size then descending lex."""
    for n in range(d + 1):
        yield from partitions_in(n, max_len, max_part)


def k_bounded_partitions(n: int, k: int) -> tuple[Partition, ...]:
    return partitions_list(n, None, k)


def lex_key_desc(lam: Sequence[int]):
    """Sort key giving descending lexicographic order."""
    return tuple(-x for x in lam) + (1,)


def distinct_permutations(v: Sequence[int]) -> Iterator[IntVector]:
    """Distinct rearrangements of ``v`` in lexicographic order."""
    items = sorted(v)
    n = len(items)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(items)
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])
