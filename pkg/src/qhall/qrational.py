"""Univariate rational functions in q with integer coefficients.

Canonical form: numerator and denominator share no polynomial factor, the
denominator is a true polynomial with nonzero constant term and positive
leading coefficient, and any overall power of q sits in the numerator's
minimum exponent (so values like q^(-3)*(1+q)/(1-q) are representable).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .laurent import LaurentQ
from .qseries import divmod_laurent


def _content(c) -> int:
    g = 0
    for x in c:
        g = int_gcd(g, abs(x))
        if g == 1:
            return 1
    return g or 1


def _prim(c):
    g = _content(c)
    return [x // g for x in c] if g > 1 else list(c)


def _pseudo_rem(a, b):
    """Pseudo-remainder of dense integer polynomial lists (low-to-high)."""
    a = list(a)
    lb = len(b)
    lead = b[-1]
    while len(a) >= lb:
        if a[-1] == 0:
            a.pop()
            continue
        # scale then eliminate the leading term
        c = a[-1]
        a = [x * lead for x in a]
        shift = len(a) - lb
        for j in range(lb):
            a[shift + j] -= c * b[j]
        while a and a[-1] == 0:
            a.pop()
        if not a:
            break
    return a


def poly_gcd(a, b):
    """Primitive-PRS gcd of dense integer polynomial lists (low-to-high)."""
    a = [x for x in a]
    b = [x for x in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a:
        return _abs_gcd(b)
    if not b:
        return _abs_gcd(a)
    ca, cb = _content(a), _content(b)
    a, b = _prim(a), _prim(b)
    if len(a) < len(b):
        a, b = b, a
    while True:
        r = _pseudo_rem(a, b)
        if not r:
            break
        a, b = b, _prim(r)
    g = [x * int_gcd(ca, cb) for x in b]
    if g[-1] < 0:
        g = [-x for x in g]
    return g


def _abs_gcd(c):
    c = _prim(c) if c else []
    if c and c[-1] < 0:
        c = [-x for x in c]
    return c


class RationalQ:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if isinstance(num, int):
            num = LaurentQ.from_int(num)
        if den is None:
            den = LaurentQ.one()
        elif isinstance(den, int):
            den = LaurentQ.from_int(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _canonical:
            num, den = _reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalQ is immutable")

    @staticmethod
    def zero() -> "RationalQ":
        return RationalQ(LaurentQ.zero())

    @staticmethod
    def one() -> "RationalQ":
        return RationalQ(LaurentQ.one())

    @staticmethod
    def from_laurent(f: LaurentQ) -> "RationalQ":
        return RationalQ(f)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def as_laurent(self) -> LaurentQ:
        if not self.den.is_one():
            raise ValueError(f"not a Laurent polynomial: denominator {self.den!r}")
        return self.num

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalQ(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQ(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalQ(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalQ(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalQ.one() / self ** (-n)
        out = RationalQ.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def evaluate(self, q: Fraction) -> Fraction:
        d = self.den.evaluate(q)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={q}")
        return self.num.evaluate(q) / d

    def series(self, q_max: int) -> LaurentQ:
        """Expand as a q-series, exact for exponents <= q_max.

        Requires the denominator's constant coefficient to be +-1, which
        holds for every Pochhammer-type denominator in this package.
        """
        from .qseries import inv_series

        if self.den.is_one():
            return self.num.truncate(q_max)
        inv = inv_series(self.den, q_max - self.num.min_exp)
        return self.num.mul_trunc(inv, q_max)

    def __repr__(self):
        if self.den.is_one():
            return f"({self.num!r})"
        return f"({self.num!r}) / ({self.den!r})"


def _coerce(x):
    if isinstance(x, RationalQ):
        return x
    if isinstance(x, (int, LaurentQ)):
        return RationalQ(x)
    return NotImplemented


def _reduce(num: LaurentQ, den: LaurentQ):
    if num.is_zero():
        return LaurentQ.zero(), LaurentQ.one()
    # strip q-powers: denominator becomes a polynomial with nonzero constant
    shift = den.min_exp
    num = num.shift(-shift)
    den = den.shift(-shift)
    g = poly_gcd(num.coeffs, den.coeffs)
    if len(g) > 1 or g[0] != 1:
        gl = LaurentQ(0, g)
        num_q, num_r = divmod_laurent(num, gl) if g[-1] in (1, -1) else _divide_general(num, g)
        den_q, den_r = divmod_laurent(den, gl) if g[-1] in (1, -1) else _divide_general(den, g)
        if num_r.is_zero() and den_r.is_zero():
            num, den = num_q, den_q
    if den.coeffs[-1] < 0:
        num, den = -num, -den
    return num, den


def _divide_general(a: LaurentQ, g):
    """Exact division by a primitive polynomial with arbitrary leading coeff."""
    ra = list(a.coeffs)
    lb = len(g)
    la = len(ra)
    if la < lb:
        return LaurentQ.zero(), a
    lead = g[-1]
    qcoeffs = [0] * (la - lb + 1)
    for i in range(la - lb, -1, -1):
        c = ra[i + lb - 1]
        if c % lead:
            return LaurentQ.zero(), a  # treated as non-exact
        c //= lead
        qcoeffs[i] = c
        for j in range(lb):
            ra[i + j] -= c * g[j]
    rem = LaurentQ(a.min_exp, ra[: lb - 1] if lb > 1 else [])
    return LaurentQ(a.min_exp, qcoeffs), rem
