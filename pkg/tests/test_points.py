from fractions import Fraction

import pytest

from qhall.laurent import LaurentQ
from qhall.points import (
    COMPONENT_BOUND,
    DEFAULT_SEED,
    ResampleNeeded,
    eval_exact,
    frac_poch,
    frac_qbinom,
    inv_frac_poch,
    iter_points,
    sample_point,
)
from qhall.qrational import RationalQ
from qhall.qseries import qbinom, qpoch
from qhall.series import MultiSeries


def test_default_seed_value():
    assert DEFAULT_SEED == 0x484C51


def test_sampling_deterministic_and_bounded():
    a = sample_point(("q", "a"), 7, 0)
    b = sample_point(("q", "a"), 7, 0)
    assert a.assignments == b.assignments
    c = sample_point(("q", "a"), 7, 1)
    assert c.assignments != a.assignments
    for v in a.assignments.values():
        assert v != 0
        assert abs(v.numerator) <= COMPONENT_BOUND ** 2  # after reduction
        assert 1 <= v.denominator <= COMPONENT_BOUND


def test_iter_points_resamples_on_pole():
    seen = []

    def check(point):
        if len(seen) < 2:
            seen.append(point.index)
            raise ResampleNeeded("forced")
        return point["q"]

    results = list(iter_points(("q",), 3, 2, check))
    assert len(results) == 2
    assert results[0][2] == 2  # two forced resamples recorded


def test_eval_exact_examples():
    q = Fraction(1, 3)
    one_minus_q = LaurentQ.from_terms([(0, 1), (1, -1)])
    ratio = RationalQ(one_minus_q, one_minus_q)
    point = sample_point(("q",), 1, 0)
    point.assignments["q"] = q
    assert eval_exact(ratio, point) == 1
    point.assignments["q"] = Fraction(2)
    assert eval_exact(qbinom(4, 2), point) == 35
    ms = MultiSeries.monomial(2, (1, 1), LaurentQ.q_power(1))
    point.assignments.update({"x1": Fraction(1, 2), "x2": Fraction(3)})
    assert eval_exact(ms, point) == Fraction(3)


def test_formal_identity_holds_at_many_points():
    # soundness direction: a true polynomial identity holds at every point
    lhs = qpoch(4)
    rhs = qpoch(2) * LaurentQ.from_terms([(0, 1), (3, -1)]) * LaurentQ.from_terms(
        [(0, 1), (4, -1)]
    )
    assert lhs == rhs
    for i in range(20):
        p = sample_point(("q",), DEFAULT_SEED, i)
        assert lhs.evaluate(p["q"]) == rhs.evaluate(p["q"])


def test_frac_poch_conventions():
    q = Fraction(2, 5)
    x = Fraction(3, 7)
    assert frac_poch(x, 0, q) == 1
    assert frac_poch(x, 2, q) == (1 - x) * (1 - x * q)
    # negative index: reciprocal finite product
    assert frac_poch(x, -2, q) == 1 / ((1 - x / q) * (1 - x / q ** 2))
    # the reciprocal of the q-factorial at negative index is exactly zero
    assert inv_frac_poch(q, -3, q) == 0
    with pytest.raises(ResampleNeeded):
        frac_poch(q, -1, q)
    with pytest.raises(ResampleNeeded):
        inv_frac_poch(Fraction(1), 1, q)  # (1;q)_1 = 0 in a denominator


def test_frac_qbinom_matches_polynomial():
    q = Fraction(3, 4)
    for n in range(7):
        for m in range(-1, n + 2):
            assert frac_qbinom(n, m, q) == qbinom(n, m).evaluate(q)
