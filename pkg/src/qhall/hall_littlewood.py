"""Hall-Littlewood polynomials P and Q, strip coefficients and specializations.

The workhorse is the branching rule: adding one variable at a time over
horizontal strips, with the single-variable skew coefficient psi (for P) or
phi (for Q). The n!-cost symmetrization formula is kept as an independent
small-scale oracle.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Optional

from .laurent import LaurentQ
from .partitions import (
    EMPTY,
    Partition,
    dot,
    is_horizontal_strip,
    n_stat,
    strip_columns,
    strips_under,
)
from .qrational import RationalQ
from .qseries import one_minus_qk, qpoch
from .series import MultiSeries, exact_div


def psi_coeff(lam: Partition, mu: Partition) -> LaurentQ:
    """Single-variable skew-P coefficient over the horizontal strip lam/mu.

    Product of (1 - q^(m_j(mu))) over columns j where the strip pattern
    steps from empty to filled.
    """
    theta = strip_columns(lam, mu)
    out = LaurentQ.one()
    for j in range(1, len(theta)):
        if theta[j - 1] == 0 and theta[j] == 1:
            out = out * one_minus_qk(mu.multiplicity(j))
    return out


def phi_coeff(lam: Partition, mu: Partition) -> LaurentQ:
    """Single-variable skew-Q coefficient over the horizontal strip lam/mu.

    Product of (1 - q^(m_i(lam))) over columns i where the strip pattern
    steps from filled to empty (the last filled column always counts).
    """
    theta = strip_columns(lam, mu)
    out = LaurentQ.one()
    for i in range(1, len(theta) + 1):
        here = theta[i - 1]
        nxt = theta[i] if i < len(theta) else 0
        if here == 1 and nxt == 0:
            out = out * one_minus_qk(lam.multiplicity(i))
    return out


def skew_P_single(lam: Partition, mu: Partition):
    """(psi, box count) for a horizontal strip, or None when lam/mu is not one."""
    if not is_horizontal_strip(lam, mu):
        return None
    return psi_coeff(lam, mu), lam.weight - mu.weight


def skew_Q_single(lam: Partition, mu: Partition):
    """(phi, box count) for a horizontal strip, or None when lam/mu is not one."""
    if not is_horizontal_strip(lam, mu):
        return None
    return phi_coeff(lam, mu), lam.weight - mu.weight


def b_poly(lam: Partition) -> LaurentQ:
    """The normalizing polynomial prod_i (q;q)_(m_i(lam))."""
    out = LaurentQ.one()
    for i in range(1, lam.part(1) + 1):
        m = lam.multiplicity(i)
        if m:
            out = out * qpoch(m)
    return out


class HLPolynomial:
    """A Hall-Littlewood polynomial: indexing partition, variable count, value."""

    __slots__ = ("partition", "num_vars", "value")

    def __init__(self, partition: Partition, num_vars: int, value: MultiSeries):
        self.partition = partition
        self.num_vars = num_vars
        self.value = value

    def __eq__(self, other):
        if isinstance(other, HLPolynomial):
            return (
                self.partition == other.partition
                and self.num_vars == other.num_vars
                and self.value == other.value
            )
        return NotImplemented

    def __repr__(self):
        return f"HL(P_{self.partition.parts}, n={self.num_vars})"


@lru_cache(maxsize=None)
def _hl_value(lam: Partition, n: int, kind: str) -> MultiSeries:
    return _skew_value(lam, EMPTY, n, kind)


def _skew_value(lam: Partition, nu: Partition, n: int, kind: str) -> MultiSeries:
    """Skew Hall-Littlewood value in n variables via iterated branching.

    kind "P" uses psi coefficients, "Q" uses phi. Variables are peeled from
    the last index down, matching the two-alphabet expansion of skew values.
    """
    coeff = psi_coeff if kind == "P" else phi_coeff
    states = {lam: MultiSeries.one(n)}
    for step in range(n):
        var = n - 1 - step
        nxt = {}
        for top, series in states.items():
            for bot in strips_under(top):
                if not bot.contains(nu):
                    continue
                boxes = top.weight - bot.weight
                e = [0] * n
                e[var] = boxes
                piece = series.mul(
                    MultiSeries.monomial(n, e, coeff(top, bot))
                )
                prev = nxt.get(bot)
                nxt[bot] = piece if prev is None else prev + piece
        states = nxt
    value = states.get(nu)
    return value if value is not None else MultiSeries.zero(n)


def hl_P(lam: Partition, n: int, cutoff: Optional[int] = None) -> HLPolynomial:
    """Hall-Littlewood P in n variables (zero when the partition is too long).

    The value is homogeneous of degree weight(lam), hence exact; an optional
    cutoff truncates it away entirely when weight(lam) > cutoff.
    """
    if cutoff is not None and lam.weight > cutoff:
        return HLPolynomial(lam, n, MultiSeries.zero(n, cutoff))
    return HLPolynomial(lam, n, _hl_value(lam, n, "P"))


def hl_Q(lam: Partition, n: int, cutoff: Optional[int] = None) -> HLPolynomial:
    """Hall-Littlewood Q = b_lam(q) * P_lam."""
    p = hl_P(lam, n, cutoff)
    return HLPolynomial(lam, n, p.value.scale(b_poly(lam)))


def hl_P_skew(lam: Partition, nu: Partition, n: int) -> MultiSeries:
    """Skew P value in n variables; zero unless nu fits inside lam."""
    if not lam.contains(nu):
        return MultiSeries.zero(n)
    return _skew_value(lam, nu, n, "P")


def hl_Q_skew(lam: Partition, nu: Partition, n: int) -> MultiSeries:
    """Skew Q value in n variables; zero unless nu fits inside lam."""
    if not lam.contains(nu):
        return MultiSeries.zero(n)
    return _skew_value(lam, nu, n, "Q")


def hl_P_symmetrization(lam: Partition, n: int) -> HLPolynomial:
    """Direct symmetrization formula; an n!-cost oracle for hl_P.

    Sums x^alpha * prod_(alpha_u > alpha_v) (x_u - q x_v)/(x_u - x_v) over all
    distinct rearrangements alpha of the padded part list, assembled over the
    Vandermonde common denominator and divided out exactly. Raises when the
    rational-function sum fails to cancel to a polynomial.
    """
    if lam.length > n:
        return HLPolynomial(lam, n, MultiSeries.zero(n))
    padded = lam.parts + (0,) * (n - lam.length)
    q = LaurentQ.q_power(1)
    vandermonde = MultiSeries.one(n)
    for u in range(n):
        for v in range(u + 1, n):
            vandermonde = vandermonde.mul(_x_minus_cx(n, u, v, LaurentQ.one()))
    total = MultiSeries.zero(n)
    for alpha in sorted(set(permutations(padded)), reverse=True):
        term = MultiSeries.monomial(n, alpha)
        sign = 1
        for u in range(n):
            for v in range(n):
                if alpha[u] > alpha[v]:
                    term = term.mul(_x_minus_cx(n, u, v, q))
        for u in range(n):
            for v in range(u + 1, n):
                if alpha[u] < alpha[v]:
                    sign = -sign
                elif alpha[u] == alpha[v]:
                    term = term.mul(_x_minus_cx(n, u, v, LaurentQ.one()))
        if sign < 0:
            term = -term
        total = total + term
    try:
        value = exact_div(total, vandermonde)
    except ValueError as exc:
        raise ArithmeticError(
            "symmetrization did not cancel to a polynomial"
        ) from exc
    return HLPolynomial(lam, n, value)


def _x_minus_cx(n: int, u: int, v: int, c: LaurentQ) -> MultiSeries:
    """The binomial x_u - c * x_v."""
    eu = [0] * n
    eu[u] = 1
    ev = [0] * n
    ev[v] = 1
    return MultiSeries(n, None, {tuple(eu): LaurentQ.one(), tuple(ev): -c})


def spec_principal_P(
    lam: Partition, n: int, z: Optional[LaurentQ] = None
) -> RationalQ:
    """P at the geometric point (1, q, ..., q^(n-1)).

    Equals q^(n_stat) (q;q)_n / ((q;q)_(n-len) b_lam(q)), which always reduces
    to a Laurent polynomial; zero when the partition has more than n parts.
    An optional prefactor z multiplies the result by z^weight (homogeneity,
    for points of the form (z, zq, ..., zq^(n-1)))."""
    if lam.length > n:
        return RationalQ.zero()
    num = LaurentQ.q_power(n_stat(lam)) * qpoch(n)
    den = qpoch(n - lam.length) * b_poly(lam)
    out = RationalQ(num, den)
    if not out.is_polynomial():
        raise ArithmeticError("principal specialization did not reduce to a polynomial")
    if z is not None:
        out = out * RationalQ(z ** lam.weight)
    return out


def spec_principal_Q_infinite(lam: Partition) -> LaurentQ:
    """Q at the infinite geometric point (1, q, q^2, ...): a single q-power."""
    return LaurentQ.q_power(n_stat(lam))


def spec_principal_P_infinite(lam: Partition, q_max: int) -> LaurentQ:
    """P at (1, q, q^2, ...) as a q-series: q^(n_stat)/b_lam, exact to q_max."""
    from .qseries import inv_series

    return inv_series(b_poly(lam), q_max - n_stat(lam)).shift(n_stat(lam)).truncate(q_max)
