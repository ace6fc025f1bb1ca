from fractions import Fraction

import pytest

from qhall.bivariate import QTFraction, QTPoly
from qhall.hall_littlewood import phi_coeff, psi_coeff
from qhall.laurent import LaurentQ
from qhall.macdonald import (
    arm,
    leg,
    macdonald_cprime,
    macdonald_phi,
    macdonald_psi,
)
from qhall.partitions import EMPTY, Partition, partitions_up_to, strips_under

P = Partition


def test_arm_leg():
    lam = P((4, 3, 1))
    assert arm(lam, 1, 1) == 3
    assert leg(lam, 1, 1) == 2
    assert arm(lam, 2, 3) == 0
    assert leg(lam, 2, 3) == 0


def test_cprime_examples():
    assert macdonald_cprime(EMPTY) == QTPoly.one()
    assert macdonald_cprime(P((1,))) == QTPoly({(0, 0): 1, (1, 0): -1})
    got = macdonald_cprime(P((2,)))
    expect = QTPoly({(0, 0): 1, (2, 0): -1}) * QTPoly({(0, 0): 1, (1, 0): -1})
    assert got == expect


def test_cprime_at_q_zero_is_one():
    for lam in partitions_up_to(6):
        assert macdonald_cprime(lam).subs_q_zero() == {0: 1}


def _tpoly_from_laurent(f: LaurentQ) -> dict:
    assert f.min_exp >= 0
    return {f.min_exp + i: c for i, c in enumerate(f.coeffs) if c}


def _tpoly_mul(a: dict, b: dict) -> dict:
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _reduces_to(frac, target: LaurentQ) -> bool:
    """frac(0, t) equals the target as a rational function of t."""
    num0 = frac.num.subs_q_zero()
    den0 = frac.den.subs_q_zero()
    return num0 == _tpoly_mul(_tpoly_from_laurent(target), den0)


def test_psi_qt_reduces_at_q_zero():
    for lam in partitions_up_to(5):
        for mu in strips_under(lam):
            assert _reduces_to(macdonald_psi(lam, mu), psi_coeff(lam, mu)), (lam, mu)


def test_phi_qt_reduces_at_q_zero():
    for lam in partitions_up_to(5):
        for mu in strips_under(lam):
            assert _reduces_to(macdonald_phi(lam, mu), phi_coeff(lam, mu)), (lam, mu)


def test_psi_qt_trivial_and_errors():
    lam = P((2, 1))
    assert macdonald_psi(lam, lam).equals(QTFraction.one())
    with pytest.raises(ValueError):
        macdonald_psi(P((2, 2)), P())


def test_psi_qt_frozen_single_box():
    # mu = (1) inside lam = (2): one qualifying square with a hand-computed
    # ratio of hook factors
    got = macdonald_psi(P((2,)), P((1,)))
    expect = QTFraction(
        QTPoly({(0, 0): 1, (0, 1): -1}) * QTPoly({(0, 0): 1, (2, 0): -1}),
        QTPoly({(0, 0): 1, (1, 0): -1}) * QTPoly({(0, 0): 1, (1, 1): -1}),
    )
    assert got.equals(expect)


def test_bivariate_fraction_canonical():
    x = QTFraction(QTPoly({(1, 0): 1, (1, 1): 1}), QTPoly({(0, 1): 1, (1, 1): 1}))
    c = x.canonical()
    # common factor (q + qt)/(t + qt) = q(1+t)/t(1+q): gcd is (1+t)? no:
    # q(1+t) and t(1+q) share nothing; canonical keeps them coprime
    assert c.num * x.den == c.den * x.num


def test_bivariate_evaluate():
    f = QTFraction(QTPoly({(1, 1): 3}), QTPoly({(0, 0): 1, (1, 0): -1}))
    q, t = Fraction(1, 2), Fraction(1, 3)
    assert f.evaluate(q, t) == Fraction(3) * q * t / (1 - q)
