import pytest

from qhall.laurent import LaurentQ
from qhall.partitions import enumerate_partitions
from qhall.qseries import (
    divmod_laurent,
    eta_quotient,
    inv_series,
    poch_at,
    qbinom,
    qpoch,
    qpoch_at,
    qpoch_inf,
)
from qhall.series import MultiSeries


def test_qpoch_examples():
    assert qpoch(0) == LaurentQ.one()
    assert qpoch(2) == LaurentQ.from_terms([(0, 1), (1, -1), (2, -1), (3, 1)])
    assert qpoch(3).degree == 6
    assert qpoch(3)[0] == 1
    with pytest.raises(ValueError):
        qpoch(-1)


def _qbinom_recurrence(n, m):
    # independent Gaussian-recurrence oracle
    if m < 0 or m > n:
        return LaurentQ.zero()
    if m == 0 or m == n:
        return LaurentQ.one()
    return _qbinom_recurrence(n - 1, m - 1) + LaurentQ.q_power(m) * _qbinom_recurrence(
        n - 1, m
    )


def test_qbinom_frozen_and_recurrence():
    assert qbinom(4, 2) == LaurentQ.from_terms(
        [(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]
    )
    assert qbinom(7, 0) == LaurentQ.one()
    assert qbinom(2, 3) == LaurentQ.zero()
    assert qbinom(5, -1) == LaurentQ.zero()
    for n in range(13):
        for m in range(n + 1):
            assert qbinom(n, m) == _qbinom_recurrence(n, m)


def test_qbinom_symmetry():
    for n in range(10):
        for m in range(n + 1):
            assert qbinom(n, m) == qbinom(n, n - m)


def test_poch_at():
    a = LaurentQ.q_power(2)
    assert poch_at(a, 1) == LaurentQ.from_terms([(0, 1), (2, -1)])
    assert poch_at(a, 0) == LaurentQ.one()


def test_qpoch_at_series():
    z = MultiSeries.variable(1, 0, 4)
    assert qpoch_at(z, 1, 4) == MultiSeries.one(1, 4) - z
    got = qpoch_at(z.shift_q(1), 2, 4)
    # (1 - zq)(1 - zq^2) expanded
    expect = MultiSeries(
        1,
        4,
        {
            (0,): LaurentQ.one(),
            (1,): LaurentQ.from_terms([(1, -1), (2, -1)]),
            (2,): LaurentQ.q_power(3),
        },
    )
    assert got == expect
    assert qpoch_at(z, 0, 4) == MultiSeries.one(1, 4)


def test_divmod_laurent():
    q, r = divmod_laurent(qpoch(4), qpoch(2))
    assert r.is_zero()
    assert q * qpoch(2) == qpoch(4)


def test_eta_quotient_matches_qpoch():
    n = 20
    assert eta_quotient(1, [(1, 1)], n) == qpoch_inf(n)
    assert eta_quotient(3, [], 15) == LaurentQ.one()
    with pytest.raises(ValueError):
        eta_quotient(5, [(6, 1)], 10)


def test_eta_quotient_inverse_is_partition_gf():
    g = eta_quotient(1, [(1, -1)], 25)
    for w in range(26):
        assert g[w] == len(enumerate_partitions(w))


def test_eta_quotient_restricted_parts():
    # parts not divisible by 3: counts equal partitions into parts 1,2 mod 3
    g = eta_quotient(3, [(1, -1), (2, -1)], 15)
    for w in range(16):
        count = sum(
            1
            for lam in enumerate_partitions(w)
            if all(p % 3 != 0 for p in lam.parts)
        )
        assert g[w] == count


def test_inv_series_roundtrip():
    f = qpoch(5)
    inv = inv_series(f, 30)
    assert f.mul_trunc(inv, 30) == LaurentQ.one()
