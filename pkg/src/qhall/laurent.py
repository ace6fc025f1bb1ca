"""Exact Laurent polynomials in the formal variable q with integer coefficients.

Values are immutable and kept in canonical form: the stored coefficient list
is trimmed so that its first and last entries are nonzero, and the zero value
is the empty list. Negative exponents are first-class citizens.
"""

from __future__ import annotations

from fractions import Fraction

from .kernels import conv, conv_trunc


class LaurentQ:
    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int = 0, coeffs=()):
        coeffs = list(coeffs)
        lo = 0
        hi = len(coeffs)
        while hi > lo and coeffs[hi - 1] == 0:
            hi -= 1
        while lo < hi and coeffs[lo] == 0:
            lo += 1
        if lo == hi:
            object.__setattr__(self, "min_exp", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "min_exp", min_exp + lo)
            object.__setattr__(self, "coeffs", tuple(coeffs[lo:hi]))

    def __setattr__(self, name, value):
        raise AttributeError("LaurentQ is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentQ":
        return _ZERO

    @staticmethod
    def one() -> "LaurentQ":
        return _ONE

    @staticmethod
    def from_int(c: int) -> "LaurentQ":
        return LaurentQ(0, (c,))

    @staticmethod
    def q_power(k: int, coeff: int = 1) -> "LaurentQ":
        """The monomial coeff * q**k."""
        return LaurentQ(k, (coeff,))

    @staticmethod
    def from_terms(terms) -> "LaurentQ":
        """Build from an iterable of (exponent, coefficient) pairs."""
        terms = [(e, c) for e, c in terms if c]
        if not terms:
            return _ZERO
        lo = min(e for e, _ in terms)
        hi = max(e for e, _ in terms)
        coeffs = [0] * (hi - lo + 1)
        for e, c in terms:
            coeffs[e - lo] += c
        return LaurentQ(lo, coeffs)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.min_exp == 0 and self.coeffs == (1,)

    @property
    def degree(self) -> int:
        """Largest exponent with nonzero coefficient; zero polynomial -> -1."""
        if not self.coeffs:
            return -1
        return self.min_exp + len(self.coeffs) - 1

    def __getitem__(self, exponent: int) -> int:
        i = exponent - self.min_exp
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.min_exp + i, c

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentQ.from_int(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.min_exp, other.min_exp)
        hi = max(self.degree, other.degree)
        out = [0] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.min_exp - lo + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.min_exp - lo + i] += c
        return LaurentQ(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentQ.from_int(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            return LaurentQ(self.min_exp, [other * c for c in self.coeffs])
        if not isinstance(other, LaurentQ):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return _ZERO
        return LaurentQ(
            self.min_exp + other.min_exp, conv(list(self.coeffs), list(other.coeffs))
        )

    __rmul__ = __mul__

    def mul_trunc(self, other: "LaurentQ", q_max: int) -> "LaurentQ":
        """Product with all exponents above q_max discarded."""
        if not self.coeffs or not other.coeffs:
            return _ZERO
        lo = self.min_exp + other.min_exp
        keep = q_max - lo + 1
        if keep <= 0:
            return _ZERO
        return LaurentQ(lo, conv_trunc(list(self.coeffs), list(other.coeffs), keep))

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined on LaurentQ")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- exponent surgery ---------------------------------------------------

    def shift(self, k: int) -> "LaurentQ":
        """Multiply by q**k."""
        if not self.coeffs:
            return self
        return LaurentQ(self.min_exp + k, self.coeffs)

    def dilate(self, m: int) -> "LaurentQ":
        """Substitute q -> q**m for m >= 1."""
        if m < 1:
            raise ValueError("dilation factor must be positive")
        if m == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return LaurentQ(self.min_exp * m, out)

    def negate_exponents(self) -> "LaurentQ":
        """Substitute q -> 1/q."""
        if not self.coeffs:
            return self
        return LaurentQ(-self.degree, tuple(reversed(self.coeffs)))

    def truncate(self, q_max: int) -> "LaurentQ":
        """Drop all terms with exponent above q_max."""
        if not self.coeffs or self.degree <= q_max:
            return self
        keep = q_max - self.min_exp + 1
        if keep <= 0:
            return _ZERO
        return LaurentQ(self.min_exp, self.coeffs[:keep])

    def clip(self, q_min, q_max) -> "LaurentQ":
        """Restrict to the exponent window [q_min, q_max] (None = unbounded)."""
        f = self
        if q_max is not None:
            f = f.truncate(q_max)
        if q_min is not None and f.coeffs and f.min_exp < q_min:
            drop = q_min - f.min_exp
            f = LaurentQ(q_min, f.coeffs[drop:])
        return f

    # -- misc ----------------------------------------------------------------

    def evaluate(self, q: Fraction) -> Fraction:
        """Exact value at a rational point."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc * q ** self.min_exp if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentQ.from_int(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.min_exp, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*q" if c != 1 else "q")
            else:
                parts.append(f"{c}*q^{e}" if c != 1 else f"q^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"min_exp": self.min_exp, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(obj) -> "LaurentQ":
        return LaurentQ(int(obj["min_exp"]), [int(c) for c in obj["coeffs"]])


_ZERO = LaurentQ(0, ())
_ONE = LaurentQ(0, (1,))

#: The generator q as a ready-made constant.
Q = LaurentQ.q_power(1)
