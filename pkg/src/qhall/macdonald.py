"""Arm/leg statistics and the two-parameter strip coefficients.

Everything here lives in the exact bivariate (q, t) ring; it is the only
corner of the package that needs a second formal variable.
"""

from __future__ import annotations

from .bivariate import QTFraction, QTPoly
from .partitions import Partition, is_horizontal_strip, strip_columns


def arm(lam: Partition, i: int, j: int) -> int:
    """Squares strictly right of (i, j) in row i (1-based)."""
    return lam.part(i) - j


def leg(lam: Partition, i: int, j: int) -> int:
    """Squares strictly below (i, j) in column j (1-based)."""
    return lam.conjugate().part(j) - i


def squares(lam: Partition):
    for i, p in enumerate(lam.parts, start=1):
        for j in range(1, p + 1):
            yield i, j


def macdonald_cprime(lam: Partition) -> QTPoly:
    """The hook-style normalizer prod_s (1 - q^(arm+1) t^leg)."""
    out = QTPoly.one()
    for i, j in squares(lam):
        out = out * QTPoly(
            {(0, 0): 1, (arm(lam, i, j) + 1, leg(lam, i, j)): -1}
        )
    return out


def _b_factor(lam: Partition, i: int, j: int) -> QTFraction:
    """(1 - q^a t^(l+1)) / (1 - q^(a+1) t^l) for a square of lam."""
    a = arm(lam, i, j)
    l = leg(lam, i, j)
    return QTFraction(
        QTPoly({(0, 0): 1, (a, l + 1): -1}),
        QTPoly({(0, 0): 1, (a + 1, l): -1}),
    )


def macdonald_psi(lam: Partition, mu: Partition) -> QTFraction:
    """Two-parameter skew-P coefficient over a horizontal strip.

    Product of b_mu(s)/b_lam(s) over squares s = (i, j) of mu whose row meets
    the strip but whose column does not; at q = 0 it collapses to the
    single-parameter psi with q replaced by t.
    """
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{lam}/{mu} is not a horizontal strip")
    theta_cols = strip_columns(lam, mu)
    out = QTFraction.one()
    for i, j in squares(mu):
        row_meets = lam.part(i) > mu.part(i)
        col_meets = j <= len(theta_cols) and theta_cols[j - 1] == 1
        if row_meets and not col_meets:
            out = out * (_b_factor(mu, i, j) / _b_factor(lam, i, j))
    return out


def macdonald_phi(lam: Partition, mu: Partition) -> QTFraction:
    """Two-parameter skew-Q coefficient over a horizontal strip.

    Product of b_lam(s)/b_mu(s) over all squares of lam lying in a column
    that meets the strip, with b_mu(s) = 1 for squares outside mu. The ratio
    is oriented so that q = 0 recovers the single-parameter phi (with q
    replaced by t).
    """
    if not is_horizontal_strip(lam, mu):
        raise ValueError(f"{lam}/{mu} is not a horizontal strip")
    theta_cols = strip_columns(lam, mu)
    out = QTFraction.one()
    for i, j in squares(lam):
        if j <= len(theta_cols) and theta_cols[j - 1] == 1:
            out = out * _b_factor(lam, i, j)
            if mu.part(i) >= j:
                out = out / _b_factor(mu, i, j)
    return out
