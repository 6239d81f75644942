from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kschur import oracles
from kschur.partitions import partitions_list, partitions_upto
from kschur.schur import (
    eval_in_vars,
    eval_schur,
    hook_plethysm,
    inverse_kostka,
    inverse_kostka_entry,
    kostka,
    kostka_matrix,
    multiply,
    perp_h,
    perp_s,
    pieri_h,
    s,
    scalar_product,
    schur_product,
    schur_vector,
    straighten,
    to_monomial,
    to_schur,
)
from kschur.symfunc import SymFunc
from kschur.tpoly import T, TPoly, fraction_det


def shapes_upto(n):
    return st.integers(0, n).flatmap(lambda d: st.sampled_from(partitions_list(d)))


def test_straighten_examples():
    st_ = straighten((1, 3))
    assert (st_.sign, st_.parts) == (-1, (2, 2))
    assert straighten((2, 3)) is None
    st_ = straighten((1, 0, 2))
    assert (st_.sign, st_.parts) == (-1, (1, 1, 1))


@given(st.lists(st.integers(-3, 5), min_size=1, max_size=4))
def test_straighten_agrees_with_bialternant(v):
    # s_v = det(x_i^(v_j + n - j)) / det(x_i^(n - j)) in n variables
    n = len(v)
    exps = [v[j] + n - 1 - j for j in range(n)]
    if min(exps) < 0:
        return
    pts = [Fraction(i + 2, i + 3) for i in range(n)]
    num = fraction_det([[x ** e for e in exps] for x in pts])
    den = fraction_det([[x ** (n - 1 - j) for j in range(n)] for x in pts])
    assert eval_in_vars(schur_vector(v), pts) == num / den


def test_pieri_examples():
    assert pieri_h((1,), 1) == s(2) + s(1, 1)
    assert pieri_h((2, 1), 2) == s(4, 1) + s(3, 2) + s(3, 1, 1) + s(2, 2, 1)
    assert multiply(s(2, 2), s(1)) == s(3, 2) + s(2, 2, 1)


def test_perp_examples():
    assert perp_h(1, s(2, 1)) == s(1, 1) + s(2)
    assert perp_s((1, 1), s(1, 1)) == SymFunc.one()
    assert perp_h(3, s(2, 1)).is_zero()


@pytest.mark.parametrize("n", range(1, 8))
def test_multiplication_matches_monomial_oracle(n):
    for a in range(n + 1):
        for lam in partitions_list(a):
            for mu in partitions_list(n - a):
                assert schur_product(lam, mu) == oracles.schur_product_oracle(lam, mu)


@given(shapes_upto(4), shapes_upto(3), shapes_upto(3))
def test_perp_is_adjoint_to_multiplication(lam, mu, nu):
    # <s_mu s_nu, s_lam> == <s_nu, s_mu^perp s_lam>
    lhs = scalar_product(multiply(s(*mu), s(*nu)), s(*lam))
    rhs = scalar_product(s(*nu), perp_s(mu, s(*lam)))
    assert lhs == rhs


@given(shapes_upto(4), shapes_upto(4))
def test_multiplication_commutes(lam, mu):
    assert multiply(s(*lam), s(*mu)) == multiply(s(*mu), s(*lam))


def test_kostka_examples():
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert inverse_kostka_entry((2,), (1, 1)) == -1


@pytest.mark.parametrize("n", range(8))
def test_kostka_matches_tableau_count(n):
    parts, K = kostka_matrix(n)
    for i, lam in enumerate(parts):
        for j, mu in enumerate(parts):
            assert K[i][j] == oracles.kostka_ssyt(lam, mu)
    _, Kinv = inverse_kostka(n)
    size = len(parts)
    prod = [[sum(K[i][k] * Kinv[k][j] for k in range(size)) for j in range(size)] for i in range(size)]
    assert prod == [[int(i == j) for j in range(size)] for i in range(size)]


def test_basis_changes():
    m21 = SymFunc.basis_element((2, 1), "m")
    assert to_schur(m21) == s(2, 1) + s(1, 1, 1).scale(-2)
    assert to_schur(SymFunc.basis_element((2, 1), "h")) == s(3) + s(2, 1)
    assert scalar_product(s(2, 1), s(2, 1)) == TPoly.const(1)


@given(shapes_upto(6))
def test_schur_monomial_roundtrip(lam):
    f = s(*lam)
    assert to_schur(to_monomial(f)) == f


def test_evaluation_examples():
    assert eval_schur((1,), [2, 3]) == 5
    assert eval_schur((1, 1), [2, 3]) == 6
    assert eval_schur((2, 1), [1, 1]) == 2
    assert eval_schur((1, 1, 1), [1, 1]) == 0


def test_evaluation_needs_t_for_t_dependent_coefficients():
    f = s(1).scale(T)
    with pytest.raises(ValueError):
        eval_in_vars(f, [1, 2])
    assert eval_in_vars(f, [1, 2], t=2) == 6


def test_hook_plethysm_examples():
    assert hook_plethysm(0) == SymFunc.one()
    assert hook_plethysm(1) == s(1).scale(T - TPoly.const(1))
    assert hook_plethysm(2) == s(2).scale(T * T - T) + s(1, 1).scale(TPoly.const(1) - T)


@pytest.mark.parametrize("i", range(7))
def test_hook_plethysm_matches_power_sum_oracle(i):
    assert hook_plethysm(i) == oracles.hook_plethysm_oracle(i)


@pytest.mark.parametrize("i", range(1, 6))
def test_hook_plethysm_vanishes_at_t_one(i):
    assert hook_plethysm(i).at_t_one().is_zero()
