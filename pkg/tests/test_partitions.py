import pytest

from qhall.partitions import (
    Partition,
    StripMask,
    conjugate,
    dot,
    enumerate_partitions,
    is_horizontal_strip,
    multiplicity,
    n_stat,
    partitions_up_to,
    strips_over,
    strips_under,
)

P = Partition


def test_conjugate_examples():
    assert conjugate(P((6, 3, 3, 1))).parts == (4, 3, 3, 1, 1, 1)
    assert conjugate(P()) == P()
    assert conjugate(P((5,))).parts == (1, 1, 1, 1, 1)


def test_conjugate_involution_small():
    for lam in partitions_up_to(12):
        assert conjugate(conjugate(lam)) == lam


def test_n_stat_examples():
    assert n_stat(P((6, 3, 3, 1))) == 12
    assert n_stat(P()) == 0
    assert n_stat(P((1, 1, 1))) == 3


def test_n_stat_dual_formula():
    # sum of (i-1)*part_i equals sum of column-count choose 2
    for lam in partitions_up_to(12):
        cols = conjugate(lam)
        assert n_stat(lam) == sum(c * (c - 1) // 2 for c in cols.parts)


def test_dot_examples():
    assert dot(P((2, 1)), P((1, 1))) == 3
    assert dot(P((3, 1)), P()) == 0
    # the self-pairing of (3,2), which is the conjugate of (2,2,1)
    assert dot(P((3, 2)), P((3, 2))) == 13
    assert 13 == 2 * n_stat(P((2, 2, 1))) + P((2, 2, 1)).weight


def test_dot_norm_relation_small():
    for lam in partitions_up_to(12):
        c = conjugate(lam)
        assert 2 * n_stat(lam) + lam.weight == dot(c, c)


def test_dot_accepts_masks():
    assert dot(P((3, 2, 1)), StripMask((1, 0, 1))) == 4
    assert dot(P((3,)), (1, 1, 1)) == 3


def test_multiplicity_examples():
    lam = P((5, 3, 2, 2))
    assert multiplicity(lam, 3) == 1
    assert multiplicity(lam, 2) == 2
    assert multiplicity(lam, 7) == 0


def test_multiplicity_conjugate_relation():
    for lam in partitions_up_to(10):
        c = conjugate(lam)
        for i in range(1, lam.part(1) + 1):
            assert multiplicity(lam, i) == c.part(i) - c.part(i + 1)
        assert sum(multiplicity(lam, i) for i in range(1, lam.part(1) + 1)) == lam.length


def test_horizontal_strip_examples():
    assert is_horizontal_strip(P((6, 3, 3, 1)), P((4, 3, 1)))
    assert is_horizontal_strip(P((3, 1)), P((3, 1)))
    assert not is_horizontal_strip(P((2, 2)), P())
    assert not is_horizontal_strip(P((1,)), P((2,)))  # not even contained


def test_enumerate_counts():
    # classical partition counts
    expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    for w, c in enumerate(expected):
        assert len(enumerate_partitions(w)) == c


def test_enumerate_zero_and_constraints():
    assert enumerate_partitions(0) == [P()]
    assert [p.parts for p in enumerate_partitions(5, max_length=2)] == [
        (5,),
        (4, 1),
        (3, 2),
    ]
    assert all(p.part(1) <= 3 for p in enumerate_partitions(7, max_part=3))


def test_enumerate_reverse_lex_order():
    got = [p.parts for p in enumerate_partitions(4)]
    assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert got == sorted(got, reverse=True)


def test_strips_over_examples():
    assert [p.parts for p in strips_over(P(), 2)] == [(2,)]
    assert strips_over(P((3, 1)), 0) == [P((3, 1))]
    assert sorted(p.parts for p in strips_over(P((1,)), 1)) == [(1, 1), (2,)]


def test_strips_over_prefix():
    # pinning the first column to stay empty excludes (1,1)
    got = strips_over(P((1,)), 1, prefix=StripMask((0,)))
    assert [p.parts for p in got] == [(2,)]
    got = strips_over(P((1,)), 1, prefix=StripMask((1,)))
    assert [p.parts for p in got] == [(1, 1)]


def test_strip_mask_validation():
    with pytest.raises(ValueError):
        StripMask((0, 2))
    with pytest.raises(ValueError):
        strips_over(P((1,)), 1, prefix=(0, 2))


def test_strips_exhaustive_vs_bruteforce():
    for mu in partitions_up_to(5):
        for boxes in range(4):
            got = strips_over(mu, boxes)
            assert len(set(got)) == len(got)
            brute = [
                lam
                for lam in enumerate_partitions(mu.weight + boxes)
                if is_horizontal_strip(lam, mu)
            ]
            assert sorted(p.parts for p in got) == sorted(p.parts for p in brute)
            for lam in got:
                assert lam.weight == mu.weight + boxes


def test_strips_under_matches_over():
    for lam in partitions_up_to(6):
        under = {mu for mu in strips_under(lam)}
        brute = {
            mu
            for w in range(lam.weight + 1)
            for mu in enumerate_partitions(w)
            if is_horizontal_strip(lam, mu)
        }
        assert under == brute


def test_partition_validation_and_strings():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, -1))
    assert P((6, 3, 3, 1)).to_string() == "6,3,3,1"
    assert P.from_string("6,3,3,1").parts == (6, 3, 3, 1)
    assert P.from_string("0") == P()
    assert P.from_string("") == P()


def test_part_access():
    lam = P((4, 2))
    assert [lam.part(i) for i in (1, 2, 3, 9)] == [4, 2, 0, 0]
    with pytest.raises(IndexError):
        lam.part(0)
