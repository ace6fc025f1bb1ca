"""Shared plumbing for the identity checkers: comparison and report assembly."""

from __future__ import annotations

import time
from typing import Optional

from ..laurent import LaurentQ
from ..points import DEFAULT_SEED
from ..reports import FAIL, INCONCLUSIVE, PASS, TruncationPlan, VerifyReport
from ..series import MultiSeries


class Comparison:
    """Accumulates coefficient/point comparisons and the first mismatch.

    A pass normally requires at least one nonconstant compared coefficient
    (so a bad truncation plan cannot validate itself vacuously); routines may
    set `exhaustive` when the full finite support of both sides was compared,
    which legitimizes constant-only content at degenerate parameters.
    """

    def __init__(self):
        self.first_mismatch: Optional[dict] = None
        self.compared = 0
        self.nontrivial = 0
        self.exhaustive = False

    def record(self, where: dict, lhs, rhs, nontrivial: bool):
        self.compared += 1
        if nontrivial:
            self.nontrivial += 1
        if self.first_mismatch is None and lhs != rhs:
            self.first_mismatch = dict(where, lhs=_render(lhs), rhs=_render(rhs))

    def laurent(
        self,
        lhs: LaurentQ,
        rhs: LaurentQ,
        q_min=None,
        q_max=None,
        where=None,
        force_nontrivial: bool = False,
    ):
        """Compare exponent by exponent inside the window.

        force_nontrivial marks the entries substantive even at q-exponent 0,
        for comparisons indexed by another nonconstant dimension (a z-power,
        a sampled point, ...).
        """
        lo = min(lhs.min_exp, rhs.min_exp) if (lhs.coeffs or rhs.coeffs) else 0
        hi = max(lhs.degree, rhs.degree)
        if q_min is not None:
            lo = max(lo, q_min)
        if q_max is not None:
            hi = min(hi, q_max)
        where = where or {}
        for e in range(lo, hi + 1):
            self.record(
                dict(where, q_exponent=e),
                lhs[e],
                rhs[e],
                nontrivial=force_nontrivial or e != 0,
            )
        if hi < lo:
            # both sides vanish on the window: still counts as one comparison
            self.record(dict(where, q_exponent=None), 0, 0, nontrivial=force_nontrivial)

    def multiseries(self, lhs: MultiSeries, rhs: MultiSeries, q_min=None, q_max=None):
        keys = set(lhs.terms) | set(rhs.terms)
        for e in sorted(keys, key=lambda k: (sum(k), k)):
            cl = lhs.terms.get(e, LaurentQ.zero()).clip(q_min, q_max)
            cr = rhs.terms.get(e, LaurentQ.zero()).clip(q_min, q_max)
            self.record(
                {"monomial": list(e)},
                cl,
                cr,
                nontrivial=sum(e) > 0 or cl.degree > 0 or cr.degree > 0,
            )

    def status(self) -> str:
        if self.first_mismatch is not None:
            return FAIL
        if self.nontrivial == 0 and not self.exhaustive:
            return INCONCLUSIVE
        return PASS


def _render(value):
    if isinstance(value, LaurentQ):
        return value.to_json()
    return value


def finish(
    identity_id: str,
    params: dict,
    seed: int,
    started: float,
    cmp: Comparison,
    bounds: dict,
    status: Optional[str] = None,
) -> VerifyReport:
    bounds = dict(bounds)
    bounds["compared"] = cmp.compared
    bounds["nontrivial_compared"] = cmp.nontrivial
    return VerifyReport(
        identity_id=identity_id,
        params=params,
        status=status if status is not None else cmp.status(),
        checked_bounds=bounds,
        first_mismatch=cmp.first_mismatch,
        runtime_ms=int((time.perf_counter() - started) * 1000),
        seed=seed,
    )


def start() -> float:
    return time.perf_counter()


__all__ = [
    "Comparison",
    "finish",
    "start",
    "DEFAULT_SEED",
    "TruncationPlan",
    "PASS",
    "FAIL",
    "INCONCLUSIVE",
]
