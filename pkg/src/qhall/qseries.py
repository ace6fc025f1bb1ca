"""q-Pochhammer symbols, Gaussian binomials and truncated infinite products."""

from __future__ import annotations

from functools import lru_cache

from .laurent import LaurentQ
from .series import MultiSeries, one_minus, series_inverse


@lru_cache(maxsize=None)
def qpoch(n: int) -> LaurentQ:
    """The finite product (1-q)(1-q^2)...(1-q^n); qpoch(0) = 1."""
    if n < 0:
        raise ValueError("qpoch is defined for n >= 0")
    if n == 0:
        return LaurentQ.one()
    return qpoch(n - 1) * one_minus_qk(n)


@lru_cache(maxsize=None)
def one_minus_qk(k: int) -> LaurentQ:
    """The binomial 1 - q^k."""
    return LaurentQ.from_terms([(0, 1), (k, -1)])


def poch_at(a: LaurentQ, n: int) -> LaurentQ:
    """The finite product prod_{i=1..n} (1 - a*q^(i-1)) for a Laurent monomial
    or polynomial a."""
    if n < 0:
        raise ValueError("poch_at is defined for n >= 0")
    out = LaurentQ.one()
    for i in range(n):
        out = out * (LaurentQ.one() - a.shift(i))
    return out


def qpoch_at(a: MultiSeries, n: int, cutoff) -> MultiSeries:
    """The truncated product prod_{i=1..n} (1 - a*q^(i-1)) in the series ring."""
    if n < 0:
        raise ValueError("qpoch_at is defined for n >= 0")
    out = MultiSeries.one(a.num_vars, cutoff)
    for i in range(n):
        out = out.mul(MultiSeries.one(a.num_vars, cutoff) - a.shift_q(i))
    return out


@lru_cache(maxsize=None)
def qbinom(n: int, m: int) -> LaurentQ:
    """Gaussian binomial coefficient; zero for m < 0 or m > n >= 0.

    Computed as (q^(n-m+1);q)_m / (q;q)_m with the division checked exact.
    """
    if m < 0:
        return LaurentQ.zero()
    if n >= 0 and m > n:
        return LaurentQ.zero()
    num = poch_at(LaurentQ.q_power(n - m + 1), m)
    if num.is_zero():
        return LaurentQ.zero()
    q, r = divmod_laurent(num, qpoch(m))
    if not r.is_zero():
        raise ArithmeticError(f"qbinom({n},{m}): division left a remainder")
    return q


def divmod_laurent(a: LaurentQ, b: LaurentQ):
    """Polynomial long division a = q*b + r on the underlying coefficients.

    b's leading coefficient must be +-1 (true for all Pochhammer products).
    """
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    lead = b.coeffs[-1]
    if lead not in (1, -1):
        raise ValueError("divisor leading coefficient must be +-1")
    ra = list(a.coeffs)
    rb = list(b.coeffs)
    la, lb = len(ra), len(rb)
    if la < lb:
        return LaurentQ.zero(), a
    qcoeffs = [0] * (la - lb + 1)
    for i in range(la - lb, -1, -1):
        c = ra[i + lb - 1]
        if c:
            c *= lead  # lead is +-1 so this is exact division
            qcoeffs[i] = c
            for j in range(lb):
                ra[i + j] -= c * rb[j]
    quot = LaurentQ(a.min_exp - b.min_exp, qcoeffs)
    rem = LaurentQ(a.min_exp, ra[: lb - 1] if lb > 1 else [])
    return quot, rem


def inv_series(f: LaurentQ, q_max: int) -> LaurentQ:
    """1/f as a q-series, exact for all exponents <= q_max."""
    return series_inverse(f, q_max)


def qpoch_inf(q_max: int) -> LaurentQ:
    """(q;q)_infinity truncated at q_max."""
    return eta_quotient(1, [(1, 1)], q_max)


def eta_quotient(modulus: int, residue_exponents, q_max: int) -> LaurentQ:
    """Truncated product over arithmetic progressions.

    For each (r, e) with 1 <= r <= modulus, multiplies in
    prod_{n>=1} (1 - q^(modulus*(n-1)+r))^e; negative e divides. Only the
    finitely many factors with exponent <= q_max contribute.
    """
    if modulus < 1:
        raise ValueError("modulus must be >= 1")
    coeffs = [0] * (q_max + 1)
    coeffs[0] = 1
    for r, e in residue_exponents:
        if not 1 <= r <= modulus:
            raise ValueError(f"residue {r} outside 1..{modulus}")
        k = r
        while k <= q_max:
            for _ in range(abs(e)):
                if e > 0:
                    _mul_one_minus_qm(coeffs, k)
                else:
                    _div_one_minus_qm(coeffs, k)
            k += modulus
    return LaurentQ(0, coeffs)


def _mul_one_minus_qm(c, m):
    for i in range(len(c) - 1, m - 1, -1):
        c[i] -= c[i - m]


def _div_one_minus_qm(c, m):
    for i in range(m, len(c)):
        c[i] += c[i - m]
