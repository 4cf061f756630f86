from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qzeta.errors import DomainError
from qzeta.exact import (
    RationalPolynomial,
    bernoulli,
    binomial,
    hessenberg_determinant,
    integer_root_factorization,
    lagrange_interpolate,
)

X = RationalPolynomial.x()
small_rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (3, 5, 0), (6, 2, 15), (0, 0, 1), (-2, 3, -4)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_negative_k_is_an_error():
    with pytest.raises(DomainError):
        binomial(5, -1)


def test_binomial_all_ones_cross_check():
    # C(n-1, m)/(m+1) at n=7, m=2 is Z_7(1,1) = 5
    assert binomial(6, 2) / 3 == 5


def test_bernoulli_values():
    assert list(bernoulli(2)) == [1, Fraction(-1, 2), Fraction(1, 6)]
    table = bernoulli(12)
    assert table[4] == Fraction(-1, 30)
    assert table[7] == 0
    assert table[12] == Fraction(-691, 2730)
    assert table.max_index == 12


def test_bernoulli_recurrence_and_odd_zeros():
    B = bernoulli(40)
    for k in range(1, 41):
        assert sum(binomial(k + 1, j) * B[j] for j in range(k + 1)) == 0
    assert all(B[k] == 0 for k in range(3, 41, 2))


def test_bernoulli_rejects_negative():
    with pytest.raises(DomainError):
        bernoulli(-1)


def test_lagrange_examples():
    assert lagrange_interpolate([(1, 0), (2, 0), (3, 1)]) == (X - 1) * (X - 2) / 2
    assert lagrange_interpolate([(5, 7)]) == RationalPolynomial([7])
    target = -(X - 1) * (X - 5) / 12
    assert lagrange_interpolate([(n, target(n)) for n in range(1, 5)]) == target


def test_lagrange_duplicate_x():
    with pytest.raises(DomainError):
        lagrange_interpolate([(1, 2), (1, 3)])
    with pytest.raises(DomainError):
        lagrange_interpolate([])


@given(st.lists(st.tuples(small_rationals, small_rationals), min_size=1, max_size=7,
                unique_by=lambda p: p[0]))
def test_lagrange_reproduces_points(points):
    poly = lagrange_interpolate(points)
    assert poly.degree < len(points)
    assert all(poly(x) == y for x, y in points)


def _cofactor_det(m):
    k = len(m)
    if k == 0:
        return Fraction(1)
    total = Fraction(0)
    for perm in permutations(range(k)):
        inversions = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        term = Fraction((-1) ** inversions)
        for i, j in enumerate(perm):
            term *= m[i][j]
            if not term:
                break
        total += term
    return total


def test_hessenberg_examples():
    assert hessenberg_determinant([[Fraction(3, 7)]]) == Fraction(3, 7)
    assert hessenberg_determinant([[3, 1], [Fraction(2, 3) * 15, 3]]) == -1
    assert hessenberg_determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1


def test_hessenberg_rejects_bad_shapes():
    with pytest.raises(DomainError):
        hessenberg_determinant([[1, 2], [3, 4], [5, 6]])
    with pytest.raises(DomainError):
        hessenberg_determinant([[1, 1, 1], [1, 1, 1], [1, 1, 1]])


@settings(max_examples=60, deadline=None)
@given(st.lists(small_rationals, min_size=16, max_size=16))
def test_hessenberg_matches_cofactor_expansion(entries):
    m = [[entries[4 * i + j] if j <= i + 1 else Fraction(0) for j in range(4)] for i in range(4)]
    assert hessenberg_determinant(m) == _cofactor_det(m)


def test_integer_root_factorization():
    roots, rem = integer_root_factorization(-(X - 1) * (X - 2) * (X - 7) / 24, 10)
    assert roots == [1, 2, 7] and rem == RationalPolynomial([Fraction(-1, 24)])
    roots, rem = integer_root_factorization(X * X + 1, 10)
    assert roots == [] and rem == X * X + 1
    roots, rem = integer_root_factorization((X - 3) ** 2, 10)
    assert roots == [3, 3] and rem == RationalPolynomial([1])


def test_integer_root_search_bound_is_respected():
    roots, rem = integer_root_factorization((X - 20) * (X + 1), 5)
    assert roots == [-1] and rem == X - 20


@given(small_rationals, small_rationals, small_rationals)
def test_rational_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a:
        assert a * (1 / a) == 1
        assert (a * b) / a == b


def test_polynomial_arithmetic():
    p = X ** 3 - 2 * X + Fraction(1, 3)
    q, r = divmod(p, X - 1)
    assert q * (X - 1) + r == p
    assert p.degree == 3 and RationalPolynomial().degree == -1
    assert p(3) == Fraction(64, 3)
    assert (X - 1) * (X + 1) == X ** 2 - 1
    assert str(X ** 3 + X ** 2 - 109 * X + 251) == "n^3+n^2-109n+251"
    assert str(RationalPolynomial()) == "0"
    with pytest.raises(DomainError):
        (X ** 2 + 1) / (X - 1)
