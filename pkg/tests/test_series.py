from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhall.laurent import LaurentQ
from qhall.series import (
    MultiSeries,
    exact_div,
    geometric_inverse,
    one_minus,
    series_inverse,
)


def _series(num_vars, cutoff):
    exps = st.tuples(*[st.integers(min_value=0, max_value=3)] * num_vars)
    coeff = st.builds(
        LaurentQ,
        st.integers(min_value=-2, max_value=2),
        st.lists(st.integers(min_value=-9, max_value=9), max_size=3),
    )
    return st.builds(
        lambda terms: MultiSeries(num_vars, cutoff, terms),
        st.lists(st.tuples(exps, coeff), max_size=5),
    )


@settings(max_examples=100, deadline=None)
@given(_series(2, 6), _series(2, 6), _series(2, 6))
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a.mul(b) == b.mul(a)
    assert a.mul(b.mul(c)) == a.mul(b).mul(c)
    assert a.mul(b + c) == a.mul(b) + a.mul(c)


@settings(max_examples=100, deadline=None)
@given(_series(2, None), _series(2, None), st.integers(min_value=0, max_value=5))
def test_truncation_coherence(a, b, d):
    full = a.mul(b).truncate_degree(d)
    trunc = a.truncate_degree(d).mul(b.truncate_degree(d)).truncate_degree(d)
    assert full == trunc


def test_geometric_inverse():
    inv = geometric_inverse(1, 3, (1,))
    assert sorted(inv.terms) == [(0,), (1,), (2,), (3,)]
    assert all(c == LaurentQ.one() for c in inv.terms.values())


def test_series_inverse_geometric():
    one = MultiSeries.one(1, 3)
    x = MultiSeries.variable(1, 0, 3)
    inv = series_inverse(one - x, 3)
    assert inv == geometric_inverse(1, 3, (1,))


@settings(max_examples=60, deadline=None)
@given(_series(2, 4))
def test_inverse_defining_property(f):
    f = f + MultiSeries.one(2, 4)  # force an invertible constant term
    if f.terms.get((0, 0)) != LaurentQ.one():
        return
    inv = series_inverse(f, 4)
    assert f.mul(inv) == MultiSeries.one(2, 4)


def test_series_inverse_rejects_non_unit():
    f = MultiSeries.constant(2, LaurentQ.from_terms([(0, 2)]), 3)
    with pytest.raises(ValueError):
        series_inverse(f, 3)


def test_series_inverse_laurent_partition_counts():
    from qhall.partitions import enumerate_partitions
    from qhall.qseries import qpoch_inf

    g = series_inverse(qpoch_inf(30), 30)
    for w in range(31):
        assert g[w] == len(enumerate_partitions(w))


def test_exact_div_roundtrip():
    f = one_minus(2, (1, 0)) .mul(one_minus(2, (0, 1), LaurentQ.q_power(2)))
    g = one_minus(2, (1, 0))
    assert exact_div(f, g) == one_minus(2, (0, 1), LaurentQ.q_power(2))
    with pytest.raises(ValueError):
        exact_div(f + MultiSeries.one(2), g)


def test_embed_and_scale_q_by_degree():
    f = MultiSeries.monomial(2, (1, 2), LaurentQ.q_power(3))
    g = f.embed(4, 1)
    assert list(g.terms) == [(0, 1, 2, 0)]
    shifted = f.scale_q_by_degree(-1)
    assert shifted.terms[(1, 2)] == LaurentQ.q_power(0)


def test_evaluate_refuses_truncated():
    f = MultiSeries.one(1, 3)
    with pytest.raises(ValueError):
        f.evaluate([Fraction(1, 2)], Fraction(1, 3))
    exact = MultiSeries.monomial(1, (2,), LaurentQ.q_power(1))
    assert exact.evaluate([Fraction(1, 2)], Fraction(3)) == Fraction(3, 4)


def test_mul_q_max_truncates_coefficients():
    big = MultiSeries.constant(1, LaurentQ.from_terms([(0, 1), (5, 1)]))
    prod = big.mul(big, q_max=6)
    assert prod.terms[(0,)] == LaurentQ.from_terms([(0, 1), (5, 2)])
