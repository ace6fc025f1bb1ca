import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhall.kernels import _pykernels

try:
    from qhall.kernels import _ckernels
except ImportError:
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="extension not built")

ints_small = st.lists(st.integers(min_value=-(10 ** 6), max_value=10 ** 6), max_size=20)
ints_big = st.lists(
    st.integers(min_value=-(10 ** 25), max_value=10 ** 25), max_size=12
)


def test_conv_reference_basics():
    assert _pykernels.conv([], [1, 2]) == []
    assert _pykernels.conv([1, 1], [1, 1]) == [1, 2, 1]
    assert _pykernels.conv_trunc([1, 1], [1, 1], 2) == [1, 2]
    assert _pykernels.conv_trunc([1], [1], 0) == []


@needs_ext
@settings(max_examples=200, deadline=None)
@given(ints_small, ints_small)
def test_backends_agree_small(a, b):
    assert _ckernels.conv(a, b) == _pykernels.conv(a, b)


@needs_ext
@settings(max_examples=100, deadline=None)
@given(ints_big, ints_big)
def test_backends_agree_bignum(a, b):
    assert _ckernels.conv(a, b) == _pykernels.conv(a, b)


@needs_ext
@settings(max_examples=100, deadline=None)
@given(ints_small, ints_small, st.integers(min_value=0, max_value=30))
def test_trunc_is_prefix(a, b, keep):
    full = _pykernels.conv(a, b)
    assert _ckernels.conv_trunc(a, b, keep) == full[:keep]
    assert _pykernels.conv_trunc(a, b, keep) == full[:keep]


@needs_ext
def test_overflow_boundary():
    # products near 2^63 must fall back to exact object arithmetic
    rng = random.Random(0)
    a = [rng.choice([-1, 1]) * (2 ** 31 + rng.randint(0, 99)) for _ in range(64)]
    b = [rng.choice([-1, 1]) * (2 ** 31 + rng.randint(0, 99)) for _ in range(64)]
    assert _ckernels.conv(a, b) == _pykernels.conv(a, b)
