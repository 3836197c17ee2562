from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mnhd.errors import MixedRadicandsError
from mnhd.quadratic import QuadMatrix, QuadValue, square_free_split

F = Fraction


def test_square_free_split():
    assert square_free_split(0) == (1, 0)
    assert square_free_split(1) == (1, 1)
    assert square_free_split(8) == (2, 2)
    assert square_free_split(45) == (3, 5)
    assert square_free_split(7) == (1, 7)
    with pytest.raises(ValueError):
        square_free_split(-1)


def test_canonicalization():
    assert QuadValue(0, 1, 8) == QuadValue(0, 2, 2)
    assert QuadValue(3, 5, 1) == QuadValue(8)
    assert QuadValue(3, 0, 7).m == 0
    assert QuadValue(1, F(1, 2), 12) == QuadValue(1, 1, 3)


def test_basic_arithmetic():
    x = QuadValue(4, -1, 2)  # 4 - sqrt(2)
    y = QuadValue(4, 1, 2)
    assert x + y == QuadValue(8)
    assert x * y == QuadValue(14)  # 16 - 2
    assert y - x == QuadValue(0, 2, 2)
    assert -x == QuadValue(-4, 1, 2)
    assert 2 * x == QuadValue(8, -2, 2)
    assert x - 4 == QuadValue(0, -1, 2)
    assert 1 / y == y.inverse()
    assert x / y * y == x


def test_conjugate_product_is_rational():
    x = QuadValue(F(3, 7), F(-2, 5), 11)
    prod = x * x.conjugate()
    assert prod.is_rational
    assert prod.as_fraction() == F(3, 7) ** 2 - 11 * F(2, 5) ** 2


def test_inverse_and_zero_division():
    x = QuadValue(1, 1, 5)
    assert x * x.inverse() == QuadValue(1)
    with pytest.raises(ZeroDivisionError):
        QuadValue(0).inverse()


def test_mixed_radicands_rejected():
    with pytest.raises(MixedRadicandsError):
        QuadValue(0, 1, 2) + QuadValue(0, 1, 3)
    # rationals combine with anything
    assert QuadValue(2) + QuadValue(0, 1, 3) == QuadValue(2, 1, 3)


def test_sign_analysis_exact():
    assert QuadValue(0, 1, 2).sign() == 1
    assert QuadValue(-1, 1, 2).sign() == 1  # sqrt(2) > 1
    assert QuadValue(-2, 1, 2).sign() == -1  # sqrt(2) < 2
    assert QuadValue(3, -2, 2).sign() == 1  # 9 > 8
    assert QuadValue(F(7, 5), -1, 2).sign() == -1  # 49/25 < 2
    assert QuadValue(0).sign() == 0


def test_ordering():
    vals = [QuadValue(4, 1, 2), QuadValue(0), QuadValue(4, -1, 2), QuadValue(8)]
    assert sorted(vals) == [QuadValue(0), QuadValue(4, -1, 2),
                            QuadValue(4, 1, 2), QuadValue(8)]
    assert QuadValue(4, -1, 2) < 3
    assert QuadValue(4, 1, 2) > 5


def test_float_and_str():
    x = QuadValue(4, -1, 2)
    assert abs(float(x) - (4 - 2 ** 0.5)) < 1e-15
    assert str(x) == "4-sqrt(2)"
    assert str(QuadValue(F(1, 2), F(1, 10), 5)) == "1/2+1/10*sqrt(5)"
    assert str(QuadValue(F(-1, 3))) == "-1/3"
    assert QuadValue(7).json_dict() == {"a": "7", "b": "0", "m": 0}


rationals = st.fractions(min_value=-50, max_value=50,
                         max_denominator=40)
radicands = st.sampled_from([2, 3, 5, 6, 7, 10, 13])


@given(a=rationals, b=rationals, m=radicands)
def test_sign_matches_high_precision_float(a, b, m):
    x = QuadValue(a, b, m)
    with mpmath.workdps(50):
        val = mpmath.mpf(a.numerator) / a.denominator \
            + mpmath.mpf(b.numerator) / b.denominator * mpmath.sqrt(m)
        expected = 0 if val == 0 else (1 if val > 0 else -1)
    assert x.sign() == expected


@given(a1=rationals, b1=rationals, a2=rationals, b2=rationals, m=radicands)
def test_comparison_matches_high_precision_float(a1, b1, a2, b2, m):
    x, y = QuadValue(a1, b1, m), QuadValue(a2, b2, m)
    with mpmath.workdps(50):
        root = mpmath.sqrt(m)
        fx = mpmath.mpf(a1.numerator) / a1.denominator \
            + mpmath.mpf(b1.numerator) / b1.denominator * root
        fy = mpmath.mpf(a2.numerator) / a2.denominator \
            + mpmath.mpf(b2.numerator) / b2.denominator * root
    assert (x < y) == (fx < fy)
    assert (x == y) == (a1 == a2 and b1 == b2)


@given(a1=rationals, b1=rationals, a2=rationals, b2=rationals, m=radicands)
def test_field_identities(a1, b1, a2, b2, m):
    x, y = QuadValue(a1, b1, m), QuadValue(a2, b2, m)
    assert (x + y) - y == x
    assert x * y == y * x
    if y != 0:
        assert (x / y) * y == x


# -- QuadMatrix --------------------------------------------------------------


def _rand_quad_matrix(rng, n, m, den):
    a = np.array(rng.integers(-9, 10, (n, n)), dtype=object)
    b = np.array(rng.integers(-9, 10, (n, n)), dtype=object)
    return QuadMatrix(a, b, den, m)


def _entrywise_matmul(A, B):
    n = A.n
    return [[sum((A.entry(i, k) * B.entry(k, j) for k in range(n)),
                 QuadValue(0)) for j in range(n)] for i in range(n)]


def test_quadmatrix_matmul_against_entrywise_oracle():
    rng = np.random.default_rng(7)
    A = _rand_quad_matrix(rng, 4, 3, 2)
    B = _rand_quad_matrix(rng, 4, 3, 5)
    C = A @ B
    oracle = _entrywise_matmul(A, B)
    for i in range(4):
        for j in range(4):
            assert C.entry(i, j) == oracle[i][j]


def test_quadmatrix_scale_trace_eq():
    rng = np.random.default_rng(11)
    A = _rand_quad_matrix(rng, 3, 5, 4)
    c = QuadValue(F(2, 3), F(-1, 6), 5)
    S = A.scale(c)
    for i in range(3):
        for j in range(3):
            assert S.entry(i, j) == c * A.entry(i, j)
    assert A.trace() == sum((A.entry(i, i) for i in range(3)), QuadValue(0))
    assert A == A.scale(QuadValue(2)).scale(QuadValue(F(1, 2)))
    assert (A - A).is_zero()


def test_quadmatrix_to_float():
    A = QuadMatrix.constant(3, QuadValue(F(1, 3), F(1, 2), 2))
    expected = 1 / 3 + 0.5 * 2 ** 0.5
    assert np.allclose(A.to_float(), expected)


def test_quadmatrix_identity_and_constant():
    eye = QuadMatrix.identity(3, 2)
    assert eye.entry(0, 0) == QuadValue(1)
    assert eye.entry(0, 1) == QuadValue(0)
    J = QuadMatrix.constant(4, QuadValue(F(1, 4)))
    assert (J @ J) == J  # (J/n)^2 = J/n
