"""Root-system product identity for chains of partition sums."""

from __future__ import annotations

from itertools import product as iproduct

from ..hall_littlewood import b_poly
from ..laurent import LaurentQ
from ..partitions import conjugate, dot, partitions_up_to
from ..qseries import inv_series
from ..series import MultiSeries, geometric_inverse
from ._base import DEFAULT_SEED, Comparison, TruncationPlan, finish, start


def cartan_exponent(tuples) -> int:
    """Half the Cartan-form pairing of the conjugates: the diagonal terms
    pair up so the value is always an integer."""
    conjs = [conjugate(p) for p in tuples]
    total = sum(dot(c, c) for c in conjs)
    total -= sum(dot(conjs[i], conjs[i + 1]) for i in range(len(conjs) - 1))
    return total


def verify_hua(
    rank: int = 2, degree: int = 3, N: int = 16, seed: int = DEFAULT_SEED
):
    """Chain sum over partition tuples against the positive-root product.

    Series in a_1..a_rank with per-variable degree <= degree and q-series
    coefficients through order N (all q-exponents non-negative).
    """
    t0 = start()
    cutoff = rank * degree
    parts = partitions_up_to(degree)
    lhs = MultiSeries.zero(rank, cutoff)
    for tup in iproduct(parts, repeat=rank):
        e = cartan_exponent(tup)
        if e > N:
            continue
        den = LaurentQ.one()
        for p in tup:
            den = den * b_poly(p)
        coeff = inv_series(den, N - e).shift(e)
        lhs = lhs + MultiSeries.monomial(rank, tuple(p.weight for p in tup), coeff)
    lhs = _box(lhs, degree)

    rhs = MultiSeries.one(rank, cutoff)
    for i in range(rank):
        for j in range(i, rank):
            e = [0] * rank
            for t in range(i, j + 1):
                e[t] = 1
            for s in range(1, N + 1):
                rhs = rhs.mul(
                    geometric_inverse(rank, cutoff, e, LaurentQ.q_power(s)), q_max=N
                )
            rhs = _box(rhs, degree)

    cmp = Comparison()
    cmp.multiseries(lhs, rhs, q_max=N)
    plan = TruncationPlan(
        q_min=0,
        q_max=N,
        max_weights={f"a{i+1}": degree for i in range(rank)},
        note=(
            "Cartan form is positive definite so exponents are non-negative; "
            "factors with q-power above N are identically 1 on the window"
        ),
    )
    return finish(
        "hua.an",
        {"rank": rank, "degree": degree, "N": N},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def _box(series: MultiSeries, bound: int) -> MultiSeries:
    out = MultiSeries(series.num_vars, series.cutoff)
    for e, c in series.terms.items():
        if all(x <= bound for x in e):
            out.terms[e] = c
    return out
