import pytest
from hypothesis import given
from hypothesis import strategies as st

from kschur.partitions import dominance_leq, partitions_list, partitions_upto
from kschur.schur import kostka_matrix, multiply, s, straighten
from kschur.symfunc import SymFunc
from kschur.tpoly import ONE, T, TPoly
from kschur.vertex import (
    B,
    apply_B_int,
    apply_B_vector,
    commutation_rhs,
    from_hl,
    hall_littlewood,
    hl_coordinates,
    hl_test_set,
    kostka_foulkes,
)


def test_single_row_examples():
    assert apply_B_int(2, SymFunc.one()) == s(2)
    assert apply_B_int(2, s(1)) == s(2, 1) + s(3).scale(T)
    h11 = s(1, 1) + s(2).scale(T)
    assert apply_B_int(1, h11) == s(1, 1, 1) + s(2, 1).scale(T + T * T) + s(3).scale(T ** 3)
    for l in range(-3, 0):
        assert apply_B_int(l, SymFunc.one()).is_zero()


def test_vector_examples():
    assert apply_B_vector((1, 1), SymFunc.one()) == s(1, 1)
    assert apply_B_vector((2, 1), SymFunc.one()) == s(2, 1)
    assert apply_B_vector((), s(2)) == s(2)
    # a trailing zero is a genuine operator index, not padding
    assert apply_B_vector((1, 0), s(1)) != apply_B_vector((1,), s(1))


def test_hall_littlewood_examples():
    assert hall_littlewood(()) == SymFunc.one()
    assert hall_littlewood((1, 1)) == s(1, 1) + s(2).scale(T)
    assert hall_littlewood((2, 1)) == s(2, 1) + s(3).scale(T)
    assert kostka_foulkes((3,), (1, 1, 1)) == T ** 3


@pytest.mark.parametrize("n", range(8))
def test_hall_littlewood_triangular_with_kostka_limit(n):
    parts, K = kostka_matrix(n)
    for j, lam in enumerate(parts):
        H = hall_littlewood(lam)
        assert H.coefficient(lam) == ONE
        for mu, c in H.terms.items():
            assert dominance_leq(lam, mu)
            assert c.is_nonnegative()
        assert [H.coefficient(mu).eval_at_one() for mu in parts] == [K[i][j] for i in range(len(parts))]


@pytest.mark.parametrize("m,n", [(1, 1), (2, 1), (0, 3), (-1, 2), (3, -1)])
def test_commutation_relation(m, n):
    lhs = B(m) * B(n)
    rhs = commutation_rhs(m, n)
    for f in hl_test_set(4):
        assert lhs(f) == rhs(f)


def test_commutation_on_schur_inputs():
    lhs, rhs = B(0) * B(3), commutation_rhs(0, 3)
    for mu in partitions_upto(3):
        assert lhs(s(*mu)) == rhs(s(*mu))


vectors = st.lists(st.integers(-1, 4), min_size=1, max_size=3).map(tuple)


@given(vectors, st.sampled_from(list(partitions_upto(3))))
def test_reordering_relation(v, mu):
    f = hall_littlewood(mu)
    st_ = straighten(v)
    got = apply_B_vector(v, f)
    if st_ is None:
        assert got.is_zero()
    else:
        assert got == apply_B_vector(st_.parts, f).scale(st_.sign)


@given(st.sampled_from([lam for lam in partitions_upto(5) if len(lam) <= 4]),
       st.sampled_from(list(partitions_upto(3))))
def test_t_one_collapse(lam, mu):
    assert apply_B_vector(lam, s(*mu)).at_t_one() == multiply(s(*lam), s(*mu))


@given(st.sampled_from(list(partitions_upto(6))))
def test_hl_coordinates_roundtrip(lam):
    f = s(*lam)
    coords = hl_coordinates(f)
    assert coords.basis == "H"
    assert from_hl(coords) == f
    assert hl_coordinates(hall_littlewood(lam)) == SymFunc.basis_element(lam, "H")


def test_operator_expressions():
    op = T * B(1) + B(2, 1) - B(2, 1)
    assert op(SymFunc.one()) == s(1).scale(T)
    assert (B(2) * B(1))(SymFunc.one()) == hall_littlewood((2, 1))


def test_long_index_rejected():
    with pytest.raises(ValueError):
        apply_B_vector((1,) * 9, SymFunc.one())
