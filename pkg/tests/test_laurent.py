from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhall.laurent import LaurentQ, Q

laurents = st.builds(
    LaurentQ,
    st.integers(min_value=-6, max_value=6),
    st.lists(st.integers(min_value=-50, max_value=50), max_size=8),
)


def test_canonical_trimming():
    f = LaurentQ(2, (0, 0, 3, 1, 0))
    assert f.min_exp == 4
    assert f.coeffs == (3, 1)
    assert LaurentQ(5, (0, 0)).is_zero()
    assert LaurentQ(5, (0, 0)) == LaurentQ.zero()


def test_basic_arithmetic():
    f = LaurentQ.from_terms([(0, 1), (1, -1)])  # 1 - q
    g = LaurentQ.from_terms([(0, 1), (1, 1)])  # 1 + q
    assert f * g == LaurentQ.from_terms([(0, 1), (2, -1)])
    assert f + g == LaurentQ.from_terms([(0, 2)])
    assert f - f == LaurentQ.zero()
    assert (Q ** 3).min_exp == 3


@settings(max_examples=200, deadline=None)
@given(laurents, laurents, laurents)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=150, deadline=None)
@given(laurents, laurents, st.integers(min_value=-4, max_value=8))
def test_truncated_product_matches_full(a, b, n):
    assert a.mul_trunc(b, n) == (a * b).truncate(n)


def test_exponent_surgery():
    f = LaurentQ.from_terms([(-1, 2), (3, 5)])
    assert f.shift(2) == LaurentQ.from_terms([(1, 2), (5, 5)])
    assert f.dilate(3) == LaurentQ.from_terms([(-3, 2), (9, 5)])
    assert f.negate_exponents() == LaurentQ.from_terms([(1, 2), (-3, 5)])
    assert f.negate_exponents().negate_exponents() == f
    assert f.truncate(2) == LaurentQ.from_terms([(-1, 2)])
    assert f.clip(0, 10) == LaurentQ.from_terms([(3, 5)])


def test_evaluate():
    f = LaurentQ.from_terms([(-1, 1), (2, 3)])  # 1/q + 3q^2
    assert f.evaluate(Fraction(1, 2)) == Fraction(2) + Fraction(3, 4)
    assert LaurentQ.zero().evaluate(Fraction(7)) == 0


def test_pow():
    f = LaurentQ.from_terms([(0, 1), (1, 1)])
    assert f ** 0 == LaurentQ.one()
    assert f ** 3 == f * f * f
    with pytest.raises(ValueError):
        f ** -1


def test_json_roundtrip():
    f = LaurentQ.from_terms([(-2, 10 ** 30), (1, -7)])
    assert LaurentQ.from_json(f.to_json()) == f
    assert f.to_json()["coeffs"][0] == str(10 ** 30)


def test_getitem():
    f = LaurentQ.from_terms([(-1, 4), (2, -3)])
    assert f[-1] == 4
    assert f[0] == 0
    assert f[2] == -3
    assert f[99] == 0
