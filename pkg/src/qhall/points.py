"""Exact rational test points for polynomial-identity checking.

Every evaluation is exact Fraction arithmetic; a point that zeroes a
denominator raises ResampleNeeded and the driver draws a replacement, so a
reported pass is a proof of equality at each recorded point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from .laurent import LaurentQ
from .qrational import RationalQ
from .series import MultiSeries

#: Default seed for every randomized check (stable across runs).
DEFAULT_SEED = 0x484C51

#: Bound on numerators and denominators of sampled rational components.
COMPONENT_BOUND = 10 ** 4


class ResampleNeeded(ZeroDivisionError):
    """Raised when a sampled point hits a pole of the target expression."""


@dataclass(frozen=True)
class RationalPoint:
    assignments: Dict[str, Fraction]
    seed: int = DEFAULT_SEED
    index: int = 0

    def __getitem__(self, var: str) -> Fraction:
        return self.assignments[var]

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "index": self.index,
            "assignments": {k: str(v) for k, v in sorted(self.assignments.items())},
        }


def sample_point(variables, seed: int, index: int) -> RationalPoint:
    """Deterministically sample one point; index advances on resampling."""
    rng = random.Random((seed, index))
    assignments = {}
    for v in sorted(variables):
        num = 0
        while num == 0:
            num = rng.randint(-COMPONENT_BOUND, COMPONENT_BOUND)
        den = rng.randint(1, COMPONENT_BOUND)
        assignments[v] = Fraction(num, den)
    return RationalPoint(assignments, seed, index)


def iter_points(variables, seed: int, count: int, check):
    """Yield `count` points at which `check(point)` does not hit a pole.

    `check` returns a value (kept alongside the point) or raises
    ResampleNeeded/ZeroDivisionError to request a fresh point. Sampling is
    deterministic in (seed, resample history).
    """
    got = 0
    index = 0
    resamples = 0
    while got < count:
        if index > 100 * count + 1000:
            raise RuntimeError("resampling budget exhausted; expression may be degenerate")
        point = sample_point(variables, seed, index)
        index += 1
        try:
            value = check(point)
        except ZeroDivisionError:
            resamples += 1
            continue
        got += 1
        yield point, value, resamples


def eval_exact(expr, point: RationalPoint) -> Fraction:
    """Exact rational value of a LaurentQ / RationalQ / MultiSeries expression."""
    q = point.assignments.get("q")
    if isinstance(expr, LaurentQ):
        return expr.evaluate(q)
    if isinstance(expr, RationalQ):
        try:
            return expr.evaluate(q)
        except ZeroDivisionError as exc:
            raise ResampleNeeded(str(exc)) from None
    if isinstance(expr, MultiSeries):
        xs = [point.assignments[f"x{i+1}"] for i in range(expr.num_vars)]
        return expr.evaluate(xs, q)
    raise TypeError(f"cannot evaluate {type(expr).__name__} exactly")


def frac_poch(x: Fraction, n: int, q: Fraction) -> Fraction:
    """(x;q)_n at an exact point, for any integer n.

    Negative n uses (x;q)_(-m) = 1/prod_{i=1..m}(1 - x q^(-i)); a vanishing
    factor raises ResampleNeeded.
    """
    if n >= 0:
        out = Fraction(1)
        p = Fraction(1)
        for _ in range(n):
            out *= 1 - x * p
            p *= q
        return out
    denom = inv_frac_poch(x, n, q)
    if denom == 0:
        raise ResampleNeeded(f"({x};q)_{n} is infinite")
    return 1 / denom


def inv_frac_poch(x: Fraction, n: int, q: Fraction) -> Fraction:
    """1/(x;q)_n at an exact point, for any integer n.

    For n < 0 this is the finite product prod_{i=1..|n|}(1 - x q^(-i)), which
    correctly yields 0 for 1/(q;q)_(-m). For n >= 0 a vanishing factor raises
    ResampleNeeded.
    """
    if n >= 0:
        d = frac_poch(x, n, q)
        if d == 0:
            raise ResampleNeeded(f"({x};q)_{n} vanishes")
        return 1 / d
    out = Fraction(1)
    p = 1 / q
    for _ in range(-n):
        out *= 1 - x * p
        p /= q
    return out


def frac_qbinom(n: int, m: int, q: Fraction) -> Fraction:
    """Gaussian binomial at an exact point; zero outside 0 <= m <= n."""
    if m < 0 or (n >= 0 and m > n):
        return Fraction(0)
    num = frac_poch(q ** (n - m + 1), m, q)
    den = frac_poch(q, m, q)
    if den == 0:
        raise ResampleNeeded("(q;q)_m vanishes at this point")
    return num / den
