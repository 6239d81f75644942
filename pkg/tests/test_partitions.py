from collections import Counter
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kschur import oracles
from kschur.partitions import (
    conjugate,
    contained_rectangles,
    delta,
    dominance_leq,
    enumerate_k_irreducibles,
    hook_length,
    is_k_bounded,
    is_k_irreducible,
    k_bounded_partitions,
    k_rectangles,
    k_split,
    main_hook,
    partition,
    partitions_list,
    partitions_upto,
    reverse,
    union,
)


@st.composite
def partitions(draw, max_size=12):
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(partitions_list(n)))


@st.composite
def k_bounded(draw, max_size=12, max_k=5):
    k = draw(st.integers(1, max_k))
    n = draw(st.integers(0, max_size))
    return draw(st.sampled_from(k_bounded_partitions(n, k))), k


def test_conjugate_examples():
    assert conjugate((4, 2)) == (2, 2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3, 3, 3)) == (3, 3, 3)


@given(partitions())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_dominance_examples():
    assert dominance_leq((1, 1, 1), (3,))
    assert dominance_leq((2, 2), (3, 1))
    assert not dominance_leq((3, 1), (2, 2))
    with pytest.raises(ValueError):
        dominance_leq((1,), (2,))


@pytest.mark.parametrize("n", range(11))
def test_conjugation_reverses_dominance(n):
    parts = partitions_list(n)
    for lam in parts:
        for mu in parts:
            assert dominance_leq(lam, mu) == dominance_leq(conjugate(mu), conjugate(lam))


def test_hooks():
    assert hook_length((4, 2), (1, 2)) == 4
    assert main_hook((4, 2)) == 5
    assert main_hook((1,)) == 1
    assert main_hook(()) == 0


def test_k_split_examples():
    lam = (3, 2, 2, 2, 1, 1)
    assert k_split(lam, 3) == ((3,), (2, 2), (2, 1), (1,))
    assert k_split(lam, 4) == ((3, 2), (2, 2, 1), (1,))
    assert k_split((2, 1), 5) == ((2, 1),)


@given(k_bounded())
def test_k_split_blocks(pair):
    lam, k = pair
    blocks = k_split(lam, k)
    assert tuple(x for b in blocks for x in b) == lam
    for b in blocks[:-1]:
        assert main_hook(b) == k
    if blocks:
        assert main_hook(blocks[-1]) <= k


def test_k_split_errors():
    with pytest.raises(ValueError):
        k_split((3,), 2)
    with pytest.raises(ValueError):
        k_split((1,), 0)


def test_rectangles():
    assert k_rectangles(1) == [(1,)]
    assert sorted(k_rectangles(2)) == [(1, 1), (2,)]
    assert sorted(k_rectangles(3)) == [(1, 1, 1), (2, 2), (3,)]


def test_irreducibles():
    assert set(enumerate_k_irreducibles(3)) == {(), (1,), (2,), (1, 1), (2, 1), (2, 1, 1)}
    for k in range(1, 6):
        assert len(enumerate_k_irreducibles(k)) == factorial(k)
    assert not is_k_irreducible((3, 3), 3)
    assert is_k_irreducible((2, 1, 1), 3)


@given(k_bounded(max_k=3))
def test_irreducible_iff_no_rectangle(pair):
    lam, k = pair
    assert is_k_irreducible(lam, k) == (not contained_rectangles(lam, k))


def test_shape_algebra():
    assert union((2, 1), (3, 1)) == (3, 2, 1, 1)
    assert delta(3) == (2, 1, 0)
    assert reverse((1, 0), 2) == (0, 1)


@pytest.mark.parametrize("n", range(9))
def test_enumeration_matches_brute_force(n):
    assert list(partitions_list(n)) == oracles.brute_force_partitions(n)


def test_enumeration_caps():
    for lam in partitions_upto(8, max_len=3, max_part=2):
        assert len(lam) <= 3 and (not lam or lam[0] <= 2)
    assert all(is_k_bounded(lam, 2) for lam in k_bounded_partitions(6, 2))
    assert len(k_bounded_partitions(4, 2)) == 3


def test_partition_validation():
    assert partition([2, 1, 0]) == (2, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([1, -1])
