import pytest
from hypothesis import given
from hypothesis import strategies as st

from kschur.kspace import (
    NotInSpace,
    expand_in_G,
    expand_in_kschur,
    from_G,
    from_kschur,
    g_poly,
    g_table,
    in_k_space,
    k_schur,
    kschur_table,
    lambda_ak_membership,
    omega_membership,
    project_T,
    quotient_normal_form,
    reconstruct,
    reduce_to_irreducible,
)
from kschur.partitions import k_bounded_partitions, main_hook, partitions_upto
from kschur.schur import s
from kschur.symfunc import SymFunc
from kschur.tpoly import ONE, T
from kschur.vertex import apply_B_int, apply_B_vector, hall_littlewood


def k_bounded(max_k=3, max_size=6):
    return st.integers(1, max_k).flatmap(
        lambda k: st.integers(0, max_size).flatmap(
            lambda n: st.sampled_from(k_bounded_partitions(n, k)).map(lambda lam: (lam, k))))


def test_g_examples():
    assert g_poly((1, 1), 2) == s(1, 1)
    assert g_poly((2,), 2) == s(2)
    assert g_poly((2, 1, 1), 2) == apply_B_vector((2,), apply_B_vector((1, 1), SymFunc.one()))


def test_expand_examples():
    h11 = hall_littlewood((1, 1))
    assert expand_in_G(h11, 2) == SymFunc({(1, 1): ONE, (2,): T}, "G(2)")
    with pytest.raises(NotInSpace) as info:
        expand_in_G(s(3), 2)
    assert not info.value.residual.is_zero()
    assert not in_k_space(s(3), 2)


def test_projection_examples():
    h11 = hall_littlewood((1, 1))
    assert project_T(1, 2, h11) == s(1, 1)
    assert project_T(2, 2, h11) == s(2).scale(T)
    assert project_T(1, 2, g_poly((2,), 2)).is_zero()
    assert omega_membership(g_poly((2, 1), 3), 3) == {2}
    assert omega_membership(h11, 2) == {1, 2}
    assert lambda_ak_membership(apply_B_int(2, hall_littlewood((1,))), 2, 2)


@given(k_bounded())
def test_g_is_a_basis_element(pair):
    lam, k = pair
    assert expand_in_G(g_poly(lam, k), k) == SymFunc.basis_element(lam, f"G({k})")


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("n", range(8))
def test_g_tables_are_unitriangular(k, n):
    table = g_table(k, n)
    assert table.upper_triangular
    assert table.unit_diagonal
    assert len(table.parts) == len(k_bounded_partitions(n, k))


@given(k_bounded())
def test_hall_littlewood_in_k_space(pair):
    lam, k = pair
    f = hall_littlewood(lam)
    assert from_G(expand_in_G(f, k), k) == f


def test_kschur_examples():
    assert k_schur((1, 1), 2) == s(1, 1)
    assert apply_B_vector((1, 1), k_schur((2,), 2)) == k_schur((2, 1, 1), 2).scale(T)


@given(k_bounded(max_k=4))
def test_kschur_is_schur_inside_the_hook(pair):
    lam, k = pair
    if main_hook(lam) <= k:
        assert k_schur(lam, k) == s(*lam)


@given(k_bounded())
def test_kschur_leading_term_and_roundtrip(pair):
    lam, k = pair
    f = k_schur(lam, k)
    assert f.coefficient(lam) == ONE
    assert min(f.terms, key=lambda p: (sum(p), p)) == lam
    assert expand_in_kschur(f, k) == SymFunc.basis_element(lam, f"kschur({k})")
    assert from_kschur(expand_in_kschur(hall_littlewood(lam), k), k) == hall_littlewood(lam)


def test_kschur_rejects_unbounded():
    with pytest.raises(ValueError):
        k_schur((3,), 2)


def test_reduce_examples():
    # widest rectangle first; the exponent depends on the order
    assert reduce_to_irreducible((2, 1, 1), 2) == (0, [(2,), (1, 1)], ())
    assert reduce_to_irreducible((2, 1), 3) == (0, [], (2, 1))
    assert reduce_to_irreducible((2, 2, 1), 2) == (0, [(2,), (2,)], (1,))


@given(k_bounded(max_size=8))
def test_reduce_reconstructs(pair):
    lam, k = pair
    c, rects, mu = reduce_to_irreducible(lam, k)
    assert reconstruct(rects, mu, k) == k_schur(lam, k).shift_t(c)


def test_quotient_normal_form():
    tag = "kschur(2)"
    assert quotient_normal_form(SymFunc.basis_element((2, 1, 1), tag), 2).is_zero()
    f = SymFunc.basis_element((2, 1), "kschur(3)")
    assert quotient_normal_form(f, 3) == f
    assert quotient_normal_form(SymFunc.one(tag), 2) == SymFunc.one(tag)
    # a Schur-basis input is read at t = 1
    g = k_schur((2, 1), 3).at_t_one()
    assert quotient_normal_form(g, 3) == f
