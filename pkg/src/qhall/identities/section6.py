"""Outlook-layer checks: the two-parameter strip sum at exact points, the
multi-alphabet closed-form extensions, the bounded-largest-part identities
and their stable limit."""

from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct

from ..bivariate import QTFraction, QTPoly
from ..hall_littlewood import b_poly, hl_P, spec_principal_P
from ..laurent import LaurentQ
from ..macdonald import macdonald_cprime, macdonald_psi
from ..partitions import (
    EMPTY,
    Partition,
    conjugate,
    dot,
    n_stat,
    partitions_up_to,
    strips_over,
)
from ..points import ResampleNeeded, iter_points
from ..qrational import RationalQ
from ..qseries import inv_series, qpoch
from ..series import MultiSeries, geometric_inverse, one_minus
from ._base import (
    DEFAULT_SEED,
    INCONCLUSIVE,
    Comparison,
    TruncationPlan,
    finish,
    start,
)


# -- q = 0 shadow of the two-parameter sum -----------------------------------


def verify_npsom2(n: int = 2, D: int = 4, seed: int = DEFAULT_SEED):
    """Only the one-parameter shadow of the two-parameter sum is checkable
    here (the full statement needs the two-parameter symmetric functions,
    which are out of scope); a clean shadow is reported as inconclusive."""
    t0 = start()
    lhs = MultiSeries.zero(n, D)
    for lam in partitions_up_to(D, max_length=n):
        lhs = lhs + hl_P(lam, n).value.scale(LaurentQ.q_power(n_stat(lam)))
    rhs = MultiSeries.one(n, D)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        rhs = rhs.mul(geometric_inverse(n, D, e))
    cmp = Comparison()
    cmp.multiseries(lhs, rhs)
    status = INCONCLUSIVE if cmp.first_mismatch is None else None
    plan = TruncationPlan(
        x_degree=D,
        note=(
            "only the hook-normalizer-free shadow is verified; the "
            "two-parameter statement itself is out of scope"
        ),
    )
    return finish(
        "s6.npsom2", {"n": n, "D": D}, seed, t0, cmp, {"plan": plan}, status
    )


# -- two-parameter strip sum ---------------------------------------------------


def _qpoch_qt(j: int) -> QTPoly:
    out = QTPoly.one()
    for i in range(1, j + 1):
        out = out * QTPoly({(0, 0): 1, (i, 0): -1})
    return out


def psiqt_sides(mu: Partition, j: int):
    """Both sides of the z^j coefficient identity as exact (q,t)-fractions."""
    lhs = QTFraction(QTPoly(), QTPoly.one())
    for nu in strips_over(mu, j):
        term = QTFraction(QTPoly.monomial(0, n_stat(nu)), macdonald_cprime(nu))
        lhs = lhs + term * macdonald_psi(nu, mu)
    rhs = QTFraction(
        QTPoly.monomial(0, n_stat(mu)),
        _qpoch_qt(j) * macdonald_cprime(mu),
    )
    return lhs, rhs


def verify_psiqt(
    mu: Partition = Partition((1,)),
    D_z: int = 4,
    points: int = 20,
    exact_max_boxes: int = 2,
    seed: int = DEFAULT_SEED,
):
    """Per z-power, the strip sum of two-parameter coefficients against the
    closed right side: exact random (q,t) points always, full canonical
    comparison at small box counts."""
    t0 = start()
    cmp = Comparison()
    resamples = 0
    for j in range(D_z + 1):
        lhs, rhs = psiqt_sides(mu, j)
        if j <= exact_max_boxes:
            cmp.record(
                {"z_power": j, "object": "bivariate cross-multiplication"},
                "equal" if lhs.equals(rhs) else "lhs",
                "equal",
                nontrivial=True,
            )

        def at_point(p, lhs=lhs, rhs=rhs):
            return (
                lhs.evaluate(p["q"], p["t"]),
                rhs.evaluate(p["q"], p["t"]),
            )

        for point, (lv, rv), res in iter_points(("q", "t"), seed + j, points, at_point):
            resamples = max(resamples, res)
            cmp.record(
                {"z_power": j, "point": point.to_json()}, lv, rv, nontrivial=True
            )
    plan = TruncationPlan(
        x_degree=D_z,
        note="each z-power is a finite exact bivariate identity",
    )
    return finish(
        "s6.psiqt",
        {"mu": mu, "D_z": D_z, "points": points},
        seed,
        t0,
        cmp,
        {"plan": plan, "resamples": resamples},
    )


# -- multi-alphabet extensions -------------------------------------------------


def verify_an_ext(
    rank: int = 3,
    D: int = 4,
    N: int = 15,
    nx: int = 2,
    ny: int = 2,
    seed: int = DEFAULT_SEED,
):
    """Chain sum with geometric middle alphabets against its product form.

    rank 2 has no middle alphabets and reduces to the two-alphabet theorem.
    Variables: x_1..x_nx, y_1..y_ny, then the rank-2 middle scalars.
    """
    t0 = start()
    if rank < 2:
        raise ValueError("rank must be at least 2")
    nmid = rank - 2
    nv = nx + ny + nmid
    cross_min = -((D * D) // 4)
    qhi = N - cross_min  # margin so negative exponents stay certified to N

    parts = partitions_up_to(D)
    lhs = MultiSeries.zero(nv, D)

    def rec(i, prev, series, exponent, budget):
        nonlocal lhs
        if i == rank:
            lhs = lhs + series.scale(LaurentQ.q_power(exponent))
            return
        for lam in parts:
            if lam.weight > budget:
                continue
            e = n_stat(lam) - (dot(conjugate(prev), conjugate(lam)) if i else 0)
            if i == 0:
                if lam.length > nx:
                    continue
                nxt = series.mul(hl_P(lam, nx).value.embed(nv, 0))
            elif i == rank - 1:
                if lam.length > ny:
                    continue
                nxt = series.mul(hl_P(lam, ny).value.embed(nv, nx))
            else:
                # geometric middle alphabet: scalar a_i carrying the value
                # a^w q^(w + nstat)/b as a series coefficient
                w = lam.weight
                coeff = inv_series(b_poly(lam), qhi).shift(n_stat(lam) + w)
                mono = [0] * nv
                mono[nx + ny + (i - 1)] = w
                nxt = series.mul(
                    MultiSeries.monomial(nv, mono, coeff), q_max=qhi
                )
            rec(i + 1, lam, nxt, exponent + e, budget - lam.weight)

    rec(0, EMPTY, MultiSeries.one(nv, D), 0, D)
    lhs = lhs.clip_q(N)

    rhs = MultiSeries.one(nv, D)
    # products over consecutive runs of middle alphabets
    for i in range(nmid):
        for j in range(i, nmid):
            e = [0] * nv
            for t in range(i, j + 1):
                e[nx + ny + t] = 1
            for s in range(1, qhi + 1):
                rhs = rhs.mul(
                    geometric_inverse(nv, D, e, LaurentQ.q_power(s)), q_max=qhi
                )
    # boundary factors against x and against y
    for jrun in range(0, nmid + 1):
        ex = [0] * nv
        for t in range(jrun):
            ex[nx + ny + t] = 1
        ey = [0] * nv
        for t in range(nmid - jrun, nmid):
            ey[nx + ny + t] = 1
        for i in range(nx):
            exi = list(ex)
            exi[i] = 1
            rhs = rhs.mul(geometric_inverse(nv, D, exi), q_max=qhi)
        for i in range(ny):
            eyi = list(ey)
            eyi[nx + i] = 1
            rhs = rhs.mul(geometric_inverse(nv, D, eyi), q_max=qhi)
    # cross factors with the full middle monomial
    full = [0] * nv
    for t in range(nmid):
        full[nx + ny + t] = 1
    qinv = LaurentQ.q_power(-1)
    for i in range(nx):
        for j in range(ny):
            e = list(full)
            e[i] = 1
            e[nx + j] = 1
            rhs = rhs.mul(one_minus(nv, e, cutoff=D))
            rhs = rhs.mul(geometric_inverse(nv, D, e, qinv), q_max=qhi)
    rhs = rhs.clip_q(N)

    cmp = Comparison()
    cmp.multiseries(lhs, rhs, q_max=N)
    plan = TruncationPlan(
        x_degree=D,
        q_min=cross_min,
        q_max=N,
        note=(
            "negative exponents bounded by the conjugate pairings, "
            f">= {cross_min}; all series carried to q^{qhi} before clipping"
        ),
    )
    return finish(
        "s6.an_ext",
        {"rank": rank, "D": D, "N": N, "nx": nx, "ny": ny},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def verify_a3_isolated(
    D: int = 4, N: int = 15, nx: int = 2, seed: int = DEFAULT_SEED
):
    """The isolated rank-three variant with two geometric end alphabets.

    Variables: x_1..x_nx, then the two scalars.
    """
    t0 = start()
    nv = nx + 2
    ia, ib = nx, nx + 1
    cross_min = -2 * ((D * D) // 4)
    qhi = N - cross_min

    lhs = MultiSeries.zero(nv, D)
    parts = partitions_up_to(D)
    for lam in parts:
        ca = inv_series(b_poly(lam), qhi).shift(2 * n_stat(lam) + lam.weight)
        lc = conjugate(lam)
        for mu in parts:
            if lam.weight + mu.weight > D or mu.length > nx:
                continue
            pmid = hl_P(mu, nx).value.embed(nv, 0)
            mc = conjugate(mu)
            for nu in parts:
                if lam.weight + mu.weight + nu.weight > D:
                    continue
                cb = inv_series(b_poly(nu), qhi).shift(2 * n_stat(nu) + nu.weight)
                e = n_stat(mu) - dot(lc, mc) - dot(mc, conjugate(nu))
                mono = [0] * nv
                mono[ia] = lam.weight
                mono[ib] = nu.weight
                coeff = ca.mul_trunc(cb, qhi)
                term = pmid.mul(MultiSeries.monomial(nv, mono, coeff), q_max=qhi)
                lhs = lhs + term.scale(LaurentQ.q_power(e)).clip_q(qhi)
    lhs = lhs.clip_q(N)

    rhs = MultiSeries.one(nv, D)
    ea = [0] * nv
    ea[ia] = 1
    eb = [0] * nv
    eb[ib] = 1
    for s in range(1, qhi + 1):
        rhs = rhs.mul(geometric_inverse(nv, D, ea, LaurentQ.q_power(s)), q_max=qhi)
        rhs = rhs.mul(geometric_inverse(nv, D, eb, LaurentQ.q_power(s)), q_max=qhi)
    for i in range(nx):
        exi = [0] * nv
        exi[i] = 1
        for extra in ((), (ia,), (ib,), (ia, ib)):
            e = list(exi)
            for t in extra:
                e[t] = 1
            rhs = rhs.mul(geometric_inverse(nv, D, e), q_max=qhi)
        eab = list(exi)
        eab[i] = 2
        eab[ia] = 1
        eab[ib] = 1
        rhs = rhs.mul(one_minus(nv, eab, cutoff=D))
    qinv = LaurentQ.q_power(-1)
    for i in range(nx):
        for j in range(i + 1, nx):
            e = [0] * nv
            e[i] = 1
            e[j] = 1
            e[ia] = 1
            e[ib] = 1
            rhs = rhs.mul(one_minus(nv, e, cutoff=D))
            rhs = rhs.mul(geometric_inverse(nv, D, e, qinv), q_max=qhi)
    rhs = rhs.clip_q(N)

    cmp = Comparison()
    cmp.multiseries(lhs, rhs, q_max=N)
    plan = TruncationPlan(
        x_degree=D,
        q_min=cross_min,
        q_max=N,
        note="two conjugate pairings bound the negative exponents",
    )
    return finish(
        "s6.a3", {"D": D, "N": N, "nx": nx}, seed, t0, cmp, {"plan": plan}
    )


# -- bounded-largest-part identities -------------------------------------------


def _parts_in_box(kmax: int, n: int):
    return [p for p in partitions_up_to(n * kmax, max_part=kmax, max_length=n)]


def _hl_at_point(lam: Partition, xs, q: Fraction, cache: dict) -> Fraction:
    key = lam
    if key not in cache:
        cache[key] = hl_P(lam, len(xs)).value.evaluate(xs, q)
    return cache[key]


def _pair_ratio(xs, q: Fraction, subset) -> Fraction:
    out = Fraction(1)
    for i in subset:
        for j in range(len(xs)):
            if j in subset:
                continue
            den = xs[i] - xs[j]
            if den == 0:
                raise ResampleNeeded("coincident coordinates")
            out *= (xs[i] - q * xs[j]) / den
    return out


def verify_stem(
    n: int = 2, kmax: int = 3, points: int = 10, seed: int = DEFAULT_SEED
):
    """Signed-reflection closed forms for bounded-largest-part sums, checked
    per power of the auxiliary variable at exact points.

    Covers the doubled-partition display (weights 2*lam), the plain display
    with the halved reflection monomial, and the unrestricted product form.
    """
    t0 = start()
    cmp = Comparison()
    box = {k: _parts_in_box(k, n) for k in range(kmax + 1)}
    resamples = 0

    def at_point(p):
        xs = [p[f"x{i+1}"] for i in range(n)]
        q = p["q"]
        cache = {}
        rows = []
        for k in range(kmax + 1):
            lhs2 = sum(
                _hl_at_point(Partition(tuple(2 * x for x in lam.parts)), xs, q, cache)
                for lam in box[k]
            )
            lhs1 = sum(_hl_at_point(lam, xs, q, cache) for lam in box[k])
            rhs2 = Fraction(0)
            rhs1 = Fraction(0)
            for mask in iproduct((1, -1), repeat=n):
                ys = [x if s > 0 else 1 / x for x, s in zip(xs, mask)]
                flip = [i for i in range(n) if mask[i] < 0]
                refl2 = Fraction(1)
                refl1 = Fraction(1)
                for i in flip:
                    refl2 *= xs[i] ** 2
                    refl1 *= xs[i]
                psi_val = Fraction(1)
                for i in range(n):
                    den = 1 - ys[i] * ys[i]
                    if den == 0:
                        raise ResampleNeeded("reflection pole")
                    psi_val /= den
                phi_val = Fraction(1)
                for i in range(n):
                    den = 1 - ys[i]
                    if den == 0:
                        raise ResampleNeeded("reflection pole")
                    phi_val /= den
                pair = Fraction(1)
                for i in range(n):
                    for j in range(i + 1, n):
                        den = 1 - ys[i] * ys[j]
                        if den == 0:
                            raise ResampleNeeded("reflection pole")
                        pair *= (1 - q * ys[i] * ys[j]) / den
                rhs2 += psi_val * pair * refl2 ** k
                rhs1 += phi_val * pair * refl1 ** k
            rows.append((k, lhs2, rhs2, lhs1, rhs1))
        return rows

    for point, rows, res in iter_points(
        tuple(f"x{i+1}" for i in range(n)) + ("q",), seed, points, at_point
    ):
        resamples = max(resamples, res)
        for k, lhs2, rhs2, lhs1, rhs1 in rows:
            cmp.record(
                {"display": "doubled", "k": k, "point": point.to_json()},
                lhs2,
                rhs2,
                nontrivial=True,
            )
            cmp.record(
                {"display": "plain", "k": k, "point": point.to_json()},
                lhs1,
                rhs1,
                nontrivial=True,
            )
    # series form of the unrestricted sum against its product, exact in x
    D = min(2 * kmax, 6)
    tot = MultiSeries.zero(n, D)
    for lam in partitions_up_to(D, max_length=n):
        tot = tot + hl_P(lam, n).value
    prod = MultiSeries.one(n, D)
    for i in range(n):
        e = [0] * n
        e[i] = 1
        prod = prod.mul(geometric_inverse(n, D, e))
    for i in range(n):
        for j in range(i + 1, n):
            e = [0] * n
            e[i] = 1
            e[j] = 1
            prod = prod.mul(one_minus(n, e, LaurentQ.q_power(1), D))
            prod = prod.mul(geometric_inverse(n, D, e))
    cmp.multiseries(tot, prod)
    plan = TruncationPlan(
        note="bounded sums are finite at fixed k; points are exact rationals"
    )
    return finish(
        "s6.stem",
        {"n": n, "kmax": kmax, "points": points},
        seed,
        t0,
        cmp,
        {"plan": plan, "resamples": resamples},
    )


def verify_thmpf(
    n: int = 2, kmax: int = 3, points: int = 10, seed: int = DEFAULT_SEED
):
    """Subset closed form for the weighted bounded-largest-part sum, per
    power of the auxiliary variable at exact points."""
    t0 = start()
    cmp = Comparison()
    box = {k: _parts_in_box(k, n) for k in range(kmax + 1)}
    resamples = 0

    def at_point(p):
        xs = [p[f"x{i+1}"] for i in range(n)]
        q = p["q"]
        cache = {}
        rows = []
        for k in range(kmax + 1):
            lhs = sum(
                q ** n_stat(lam) * _hl_at_point(lam, xs, q, cache)
                for lam in box[k]
            )
            rhs = Fraction(0)
            for bits in iproduct((0, 1), repeat=n):
                subset = [i for i in range(n) if bits[i]]
                m = len(subset)
                xI = Fraction(1)
                for i in subset:
                    xI *= xs[i]
                head = (q ** (m * (m - 1) // 2) * xI) ** k
                fac = Fraction(1)
                for i in subset:
                    den = 1 - q ** (1 - m) / xs[i]
                    if den == 0:
                        raise ResampleNeeded("subset pole")
                    fac /= den
                for j in range(n):
                    if j in subset:
                        continue
                    den = 1 - xs[j] * q ** m
                    if den == 0:
                        raise ResampleNeeded("subset pole")
                    fac /= den
                rhs += head * fac * _pair_ratio(xs, q, subset)
            rows.append((k, lhs, rhs))
        return rows

    for point, rows, res in iter_points(
        tuple(f"x{i+1}" for i in range(n)) + ("q",), seed, points, at_point
    ):
        resamples = max(resamples, res)
        for k, lhs, rhs in rows:
            cmp.record(
                {"k": k, "point": point.to_json()}, lhs, rhs, nontrivial=True
            )
    plan = TruncationPlan(note="finite sums at exact rational points")
    return finish(
        "s6.thmpf",
        {"n": n, "kmax": kmax, "points": points},
        seed,
        t0,
        cmp,
        {"plan": plan, "resamples": resamples},
    )


def bounded_rhs_series(n: int, k: int, D_z: int) -> MultiSeries:
    """The alternating principal-specialization closed form, as a z-series
    with exact Laurent coefficients (shared by both bounded displays)."""
    out = MultiSeries.zero(1, D_z)
    from ..qseries import qbinom

    for r in range(n + 1):
        zdeg = (k + 1) * r
        if zdeg > D_z:
            continue
        head = qbinom(n, r).shift((2 * k + 3) * (r * (r - 1) // 2))
        if r % 2:
            head = -head
        term = MultiSeries.monomial(1, (zdeg,), head, D_z)
        term = term.mul(
            MultiSeries(
                1,
                D_z,
                {(0,): LaurentQ.one(), (1,): -LaurentQ.q_power(2 * r - 1)},
            )
        )
        for i in range(r):
            term = term.mul(
                MultiSeries(
                    1,
                    D_z,
                    {(0,): LaurentQ.one(), (1,): -LaurentQ.q_power(i - 1)},
                )
            )
        for i in range(n + r + 1):
            term = term.mul(geometric_inverse(1, D_z, (1,), LaurentQ.q_power(i - 1)))
        out = out + term
    return out


def verify_st(n: int = 3, k: int = 3, D_z: int = 6, seed: int = DEFAULT_SEED):
    """Doubled-partition bounded sum at the half-power geometric point against
    the alternating closed form; exact per z-power."""
    t0 = start()
    lhs = MultiSeries.zero(1, D_z)
    for lam in _parts_in_box(k, n):
        if lam.weight > D_z:
            continue
        doubled = Partition(tuple(2 * p for p in lam.parts))
        val = spec_principal_P(doubled, n).as_laurent()
        lhs = lhs + MultiSeries.monomial(1, (lam.weight,), val, D_z)
    rhs = bounded_rhs_series(n, k, D_z)
    cmp = Comparison()
    for j in range(D_z + 1):
        cmp.laurent(
            lhs.coefficient((j,)),
            rhs.coefficient((j,)),
            where={"z_power": j},
            force_nontrivial=j > 0,
        )
    plan = TruncationPlan(
        x_degree=D_z, note="per z-power both sides are exact Laurent polynomials"
    )
    return finish(
        "s6.st", {"n": n, "k": k, "D_z": D_z}, seed, t0, cmp, {"plan": plan}
    )


def verify_st2(n: int = 3, k: int = 3, D_z: int = 6, seed: int = DEFAULT_SEED):
    """Weighted bounded sum at the geometric point against the same closed
    form, plus the coincidence check against the doubled-partition route."""
    t0 = start()
    lhs = MultiSeries.zero(1, D_z)
    for lam in _parts_in_box(k, n):
        if lam.weight > D_z:
            continue
        val = spec_principal_P(lam, n).as_laurent().shift(n_stat(lam))
        lhs = lhs + MultiSeries.monomial(1, (lam.weight,), val, D_z)
    rhs = bounded_rhs_series(n, k, D_z)
    # the doubled-partition route: same values, different pipeline
    other = MultiSeries.zero(1, D_z)
    for lam in _parts_in_box(k, n):
        if lam.weight > D_z:
            continue
        doubled = Partition(tuple(2 * p for p in lam.parts))
        other = other + MultiSeries.monomial(
            1, (lam.weight,), spec_principal_P(doubled, n).as_laurent(), D_z
        )
    cmp = Comparison()
    for j in range(D_z + 1):
        cmp.laurent(
            lhs.coefficient((j,)),
            rhs.coefficient((j,)),
            where={"z_power": j},
            force_nontrivial=j > 0,
        )
        cmp.laurent(
            lhs.coefficient((j,)),
            other.coefficient((j,)),
            where={"z_power": j, "pair": "doubled-route coincidence"},
            force_nontrivial=j > 0,
        )
    plan = TruncationPlan(
        x_degree=D_z,
        note=(
            "right side shared verbatim with the doubled display by "
            "construction; the substantive coincidence is checked on the "
            "left sides"
        ),
    )
    return finish(
        "s6.st2", {"n": n, "k": k, "D_z": D_z}, seed, t0, cmp, {"plan": plan}
    )


def _poch_inf_from(first: int, N: int) -> LaurentQ:
    """prod_(e >= first) (1 - q^e) truncated at N; first >= 1."""
    acc = [0] * (N + 1)
    acc[0] = 1
    for e in range(first, N + 1):
        for i in range(N, e - 1, -1):
            acc[i] -= acc[i - e]
    return LaurentQ(0, acc)


def verify_fulman(
    k: int = 2, N: int = 30, z_powers=(1, 2), seed: int = DEFAULT_SEED
):
    """Stable limit of the bounded identity at the two geometric points."""
    t0 = start()
    cmp = Comparison()
    for c in z_powers:
        lhs = LaurentQ.zero()
        for w in range(N + 1):
            for lam in partitions_up_to(w, max_part=k):
                if lam.weight != w:
                    continue
                e = 2 * n_stat(lam) + c * lam.weight
                if e <= N:
                    lhs = lhs + inv_series(b_poly(lam), N - e).shift(e)
        rhs = LaurentQ.zero()
        r = 0
        while (2 * k + 3) * (r * (r - 1) // 2) + c * (k + 1) * r <= N:
            e = (2 * k + 3) * (r * (r - 1) // 2) + c * (k + 1) * r
            if c + r - 1 == 0:
                # first reciprocal factor cancels against the numerator
                den = qpoch(r).mul_trunc(_poch_inf_from(c + r, N), N)
                head = inv_series(den, N - e)
            else:
                den = qpoch(r).mul_trunc(_poch_inf_from(c + r - 1, N), N)
                head = inv_series(den, N - e)
                head = head - head.shift(c + 2 * r - 1)
            head = head.shift(e).truncate(N)
            rhs = rhs + (head if r % 2 == 0 else -head)
            r += 1
        cmp.laurent(
            lhs.truncate(N), rhs.truncate(N), q_max=N, where={"z": f"q^{c}"}
        )
    plan = TruncationPlan(
        q_min=0,
        q_max=N,
        note="reciprocal-product form uses the cancelled first factor at r=0",
    )
    return finish(
        "s6.fulman",
        {"k": k, "N": N, "z_powers": list(z_powers)},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )
