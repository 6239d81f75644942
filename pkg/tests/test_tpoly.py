from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kschur.tpoly import (
    NonUnitDiagonal,
    ONE,
    T,
    TPoly,
    TRat,
    ZERO,
    integer_unitriangular_inverse,
    poly_gcd,
    triangular_solve_rat,
    unitriangular_solve,
)

polys = st.lists(st.integers(-50, 50), max_size=21).map(TPoly)


@settings(max_examples=1000)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, x):
    b = a * a + T
    assert b(x) == a(x) ** 2 + x
    assert a.eval_at_one() == a(1)


@given(polys, polys.filter(bool))
def test_divmod(a, b):
    if abs(b.c[-1]) != 1:
        b = b + TPoly.monomial(b.degree + 1)
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree
    assert (a * b).exact_divide(b) == a


def test_worked_values():
    assert (ONE + T) * (ONE - T) == ONE - T ** 2
    assert (T + T ** 2).eval_at_one() == 2
    assert (T ** 3 - T).exact_divide(T) == T ** 2 - ONE
    assert (T ** 2 + ONE).exact_divide(T + ONE) is None


def test_trailing_zeros_are_trimmed():
    assert TPoly((1, 2, 0, 0)) == TPoly((1, 2))
    assert TPoly((0, 0)).is_zero()
    assert TPoly((0, 1)).to_json() == ["0", "1"]
    assert TPoly.from_json(["3", "-1"]) == TPoly((3, -1))


def test_json_handles_big_integers():
    p = TPoly((10 ** 40, -(10 ** 30)))
    assert TPoly.from_json(p.to_json()) == p


def test_gcd_and_rationals():
    a = (T - ONE) * (T + TPoly.const(2))
    b = (T - ONE) * (T ** 2 + ONE)
    g = poly_gcd(a, b)
    assert g == T - ONE or g == ONE - T
    q = TRat(a, b)
    assert q * TRat(b) == TRat(a)
    assert TRat(a * b, b).as_poly() == a
    assert TRat(ONE, T).as_poly() is None


def test_unitriangular_solve():
    M = [[ONE, T], [ZERO, ONE]]
    assert unitriangular_solve(M, [T ** 2, ONE]) == [T ** 2 - T, ONE]
    assert unitriangular_solve([[ONE]], [ONE + T]) == [ONE + T]
    eye = [[ONE if i == j else ZERO for j in range(3)] for i in range(3)]
    b = [T, ONE + T, T ** 5]
    assert unitriangular_solve(eye, b) == b


def test_unitriangular_solve_rejects_bad_input():
    with pytest.raises(NonUnitDiagonal):
        unitriangular_solve([[T]], [ONE])
    with pytest.raises(ValueError):
        unitriangular_solve([[ONE, ZERO], [T, ONE]], [ONE, ONE])


def test_rational_fallback():
    x = triangular_solve_rat([[ONE + T, ONE], [ZERO, ONE]], [ONE + T + ONE, ONE])
    assert [q.as_poly() for q in x] == [ONE, ONE]


def test_integer_inverse():
    M = [[1, 1, 1], [0, 1, 2], [0, 0, 1]]
    inv = integer_unitriangular_inverse(M)
    n = len(M)
    prod = [[sum(M[i][k] * inv[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert prod == [[int(i == j) for j in range(n)] for i in range(n)]


def test_pretty():
    assert (ONE + TPoly.monomial(2, -3)).pretty() in ("1 - 3t²", "-3t² + 1")
