"""The bounded invariance lemma, the two-bound transformation identity and
its shifted form, the three-binomial specialization, the alternating-sign
seed identities and their first iteration."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from ..hall_littlewood import b_poly
from ..laurent import LaurentQ
from ..partitions import conjugate, dot, partitions_up_to
from ..points import (
    frac_poch,
    frac_qbinom,
    inv_frac_poch,
    iter_points,
)
from ..qrational import RationalQ
from ..qseries import inv_series, qbinom, qpoch
from ..series import MultiSeries, geometric_inverse, one_minus
from ._base import DEFAULT_SEED, Comparison, TruncationPlan, finish, start


def _signature(w) -> int:
    s = 1
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                s = -s
    return s


S3 = [(w, _signature(w)) for w in permutations((1, 2, 3))]


def r_m_series(M1: int, M2: int, deg_a: int, deg_b: int, N: int) -> MultiSeries:
    """The doubly-bounded chain sum as a series in (a, b) to order N in q."""
    cutoff = deg_a + deg_b
    out = MultiSeries.zero(2, cutoff)
    for lam in partitions_up_to(deg_a, max_length=M1):
        lc = conjugate(lam)
        ll = dot(lc, lc)
        for mu in partitions_up_to(deg_b, max_length=M2):
            mc = conjugate(mu)
            e = ll + dot(mc, mc) - dot(lc, mc)
            if e > N:
                continue
            den = (
                qpoch(M1 - lam.length)
                * qpoch(M2 - mu.length)
                * b_poly(lam)
                * b_poly(mu)
            )
            out = out + MultiSeries.monomial(
                2, (lam.weight, mu.weight), inv_series(den, N - e).shift(e)
            )
    return out


def verify_lemma_inv(
    M1: int = 1,
    M2: int = 1,
    deg_a: int = 4,
    deg_b: int = 4,
    N: int = 25,
    seed: int = DEFAULT_SEED,
):
    """Invariance of the bounded chain sum under the quadratic-kernel sum."""
    t0 = start()
    cutoff = deg_a + deg_b
    lhs = MultiSeries.zero(2, cutoff)
    for r1 in range(M1 + 1):
        for r2 in range(M2 + 1):
            e = r1 * r1 - r1 * r2 + r2 * r2
            if e > N:
                continue
            kernel = inv_series(qpoch(M1 - r1) * qpoch(M2 - r2), N - e).shift(e)
            inner = r_m_series(r1, r2, deg_a - r1, deg_b - r2, N)
            shifted = MultiSeries.zero(2, cutoff)
            for ex, c in inner.terms.items():
                shifted.terms[(ex[0] + r1, ex[1] + r2)] = c
            lhs = lhs + shifted.mul(
                MultiSeries.constant(2, kernel, cutoff), q_max=N
            )
    rhs = r_m_series(M1, M2, deg_a, deg_b, N)
    cmp = Comparison()
    cmp.exhaustive = M1 == 0 and M2 == 0
    cmp.multiseries(_box2(lhs, deg_a, deg_b), _box2(rhs, deg_a, deg_b), q_max=N)
    plan = TruncationPlan(
        q_min=0,
        q_max=N,
        max_weights={"a": deg_a, "b": deg_b},
        note="both sides built from the same defining partition sum at shifted bounds",
    )
    return finish(
        "inv.lemma",
        {"M1": M1, "M2": M2, "deg_a": deg_a, "deg_b": deg_b, "N": N},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def _box2(series: MultiSeries, da: int, db: int) -> MultiSeries:
    out = MultiSeries(series.num_vars, series.cutoff)
    for e, c in series.terms.items():
        if e[0] <= da and e[1] <= db:
            out.terms[e] = c
    return out


def _bl_lhs_at(M1, M2, k, a, b, q) -> Fraction:
    """The double-sum side at an exact point; k = None is the unshifted form."""
    ab = a * b
    total = Fraction(0)
    for r1 in range(M1 + 1):
        for r2 in range(M2 + 1):
            term = a ** r1 * b ** r2 * q ** (r1 * r1 - r1 * r2 + r2 * r2)
            term *= inv_frac_poch(q, M1 - r1, q) * inv_frac_poch(q, M2 - r2, q)
            term *= frac_poch(ab * q, r1 + r2, q)
            if k is None:
                term *= inv_frac_poch(q, r1, q) * inv_frac_poch(a * q, r1, q)
                term *= inv_frac_poch(ab * q, r1, q)
                term *= inv_frac_poch(q, r2, q) * inv_frac_poch(b * q, r2, q)
                term *= inv_frac_poch(ab * q, r2, q)
            else:
                k1, k2, k3 = k
                term *= inv_frac_poch(q, r1 + k3, q) * inv_frac_poch(a * q, r1 + k2, q)
                term *= inv_frac_poch(ab * q, r1 + k1, q)
                term *= inv_frac_poch(q, r2 - k1, q) * inv_frac_poch(b * q, r2 - k2, q)
                term *= inv_frac_poch(ab * q, r2 - k3, q)
            total += term
    return total


def _bl_rhs_at(M1, M2, k, a, b, q) -> Fraction:
    ab = a * b
    if k is None:
        out = frac_poch(ab * q, M1 + M2, q)
        out *= inv_frac_poch(q, M1, q) * inv_frac_poch(a * q, M1, q)
        out *= inv_frac_poch(ab * q, M1, q)
        out *= inv_frac_poch(q, M2, q) * inv_frac_poch(b * q, M2, q)
        out *= inv_frac_poch(ab * q, M2, q)
        return out
    k1, k2, k3 = k
    e2 = k1 * k1 + k2 * k2 + k3 * k3
    if e2 % 2:
        raise ArithmeticError("odd shift norm despite zero-sum shifts")
    out = a ** (k1 + k2) * b ** k1 * q ** (e2 // 2)
    out *= frac_poch(ab * q, M1 + M2, q)
    out *= inv_frac_poch(q, M1 + k3, q) * inv_frac_poch(a * q, M1 + k2, q)
    out *= inv_frac_poch(ab * q, M1 + k1, q)
    out *= inv_frac_poch(q, M2 - k1, q) * inv_frac_poch(b * q, M2 - k2, q)
    out *= inv_frac_poch(ab * q, M2 - k3, q)
    return out


def verify_bailey_BL(
    M1: int = 2,
    M2: int = 1,
    k=None,
    strategy: str = "random_points",
    points: int = 20,
    deg: int = 4,
    N: int = 20,
    seed: int = DEFAULT_SEED,
):
    """Two-bound transformation identity in (a, b, q); k = (k1, k2, k3) with
    zero sum selects the shifted form.

    random_points evaluates both sides exactly at sampled rational points
    (each agreement is a proof at that point); series expands in (a, b) at
    tiny sizes.
    """
    t0 = start()
    if k is not None:
        k = tuple(k)
        if len(k) != 3 or sum(k) != 0:
            raise ValueError("shifts must be three integers summing to zero")
        if k[0] < 0 or k[0] + k[1] < 0:
            # The shifted display arises from r1 -> r1 - k1 - k2 and
            # r2 -> r2 - k1; its 0-based summation window only absorbs
            # non-negative offsets (extra terms die on 1/(q;q)_negative = 0,
            # missing ones cannot be restored). Outside this domain the
            # display is genuinely false, e.g. at (1, -2, 1).
            raise ValueError(
                "shift outside the display's validity domain: need k1 >= 0 and k1 + k2 >= 0"
            )
    cmp = Comparison()
    if strategy == "random_points":
        resamples = 0
        for point, values, res in iter_points(
            ("a", "b", "q"),
            seed,
            points,
            lambda p: (
                _bl_lhs_at(M1, M2, k, p["a"], p["b"], p["q"]),
                _bl_rhs_at(M1, M2, k, p["a"], p["b"], p["q"]),
            ),
        ):
            lhs, rhs = values
            resamples = res
            cmp.record({"point": point.to_json()}, lhs, rhs, nontrivial=True)
        bounds = {
            "plan": TruncationPlan(note="exact rational evaluation"),
            "points": points,
            "resamples": resamples,
        }
    elif strategy == "series":
        lhs, rhs = _bl_series(M1, M2, k, deg, N)
        cmp.multiseries(lhs, rhs, q_max=N)
        bounds = {"plan": TruncationPlan(q_max=N, x_degree=2 * deg)}
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    ident = "bl.typeii" if k is not None else "bl.bailey"
    params = {"M1": M1, "M2": M2, "strategy": strategy}
    if k is not None:
        params["k"] = list(k)
    if strategy == "random_points":
        params["points"] = points
    return finish(ident, params, seed, t0, cmp, bounds)


def _poch_series(mon_exps, shift: int, n: int, cutoff: int, N: int) -> MultiSeries:
    """(x*q^shift; q)_n in the (a, b) series ring, for any integer n.

    Negative n gives the finite reciprocal product, which is what makes the
    shifted sums terminate.
    """
    out = MultiSeries.one(2, cutoff)
    if n >= 0:
        for i in range(n):
            out = out.mul(one_minus(2, mon_exps, LaurentQ.q_power(shift + i), cutoff))
    else:
        for i in range(1, -n + 1):
            out = out.mul(one_minus(2, mon_exps, LaurentQ.q_power(shift - i), cutoff))
    return out


def _inv_poch_series(mon_exps, shift: int, n: int, cutoff: int, N: int):
    """1/(x*q^shift; q)_n as a series, or None when it is identically zero
    (the reciprocal of an infinite product guard)."""
    if n >= 0:
        out = MultiSeries.one(2, cutoff)
        for i in range(n):
            out = out.mul(
                geometric_inverse(2, cutoff, mon_exps, LaurentQ.q_power(shift + i)),
                q_max=N,
            )
        return out
    # 1/(x;q)_(-m) is the finite product prod_(i=1..m)(1 - x q^(-i)); it is
    # identically zero exactly when the monomial is the bare power of q that
    # hits 1 - q^0.
    if sum(mon_exps) == 0 and any(shift - i == 0 for i in range(1, -n + 1)):
        return None
    out = MultiSeries.one(2, cutoff)
    for i in range(1, -n + 1):
        out = out.mul(one_minus(2, mon_exps, LaurentQ.q_power(shift - i), cutoff))
    return out


def _bl_series(M1, M2, k, deg, N):
    cutoff = 2 * deg
    a, b, ab = (1, 0), (0, 1), (1, 1)
    lhs = MultiSeries.zero(2, cutoff)
    for r1 in range(M1 + 1):
        for r2 in range(M2 + 1):
            e = r1 * r1 - r1 * r2 + r2 * r2
            pref = inv_series(qpoch(M1 - r1) * qpoch(M2 - r2), N - e).shift(e)
            term = MultiSeries.monomial(2, (r1, r2), pref, cutoff)
            term = term.mul(_poch_series(ab, 1, r1 + r2, cutoff, N), q_max=None)
            if k is None:
                idx = [(None, r1), (a, r1), (ab, r1), (None, r2), (b, r2), (ab, r2)]
            else:
                k1, k2, k3 = k
                idx = [
                    (None, r1 + k3),
                    (a, r1 + k2),
                    (ab, r1 + k1),
                    (None, r2 - k1),
                    (b, r2 - k2),
                    (ab, r2 - k3),
                ]
            dead = False
            for mon, num in idx:
                if mon is None:
                    if num < 0:
                        dead = True
                        break
                    term = term.scale(inv_series(qpoch(num), N))
                else:
                    f = _inv_poch_series(mon, 1, num, cutoff, N)
                    if f is None:
                        dead = True
                        break
                    term = term.mul(f, q_max=None)
            if dead:
                continue
            lhs = lhs + term
    if k is None:
        rhs = MultiSeries.constant(2, inv_series(qpoch(M1) * qpoch(M2), N), cutoff)
        rhs = rhs.mul(_poch_series(ab, 1, M1 + M2, cutoff, N))
        for mon, num in [(a, M1), (ab, M1), (b, M2), (ab, M2)]:
            rhs = rhs.mul(_inv_poch_series(mon, 1, num, cutoff, N))
    else:
        k1, k2, k3 = k
        e2 = k1 * k1 + k2 * k2 + k3 * k3
        pref = LaurentQ.q_power(e2 // 2)
        if M1 + k3 < 0 or M2 - k1 < 0:
            rhs = MultiSeries.zero(2, cutoff)
        else:
            rhs = MultiSeries.monomial(
                2,
                (k1 + k2, k1),
                pref * inv_series(qpoch(M1 + k3) * qpoch(M2 - k1), N),
                cutoff,
            )
            rhs = rhs.mul(_poch_series(ab, 1, M1 + M2, cutoff, N))
            for mon, num in [(a, M1 + k2), (ab, M1 + k1), (b, M2 - k2), (ab, M2 - k3)]:
                f = _inv_poch_series(mon, 1, num, cutoff, N)
                rhs = rhs.mul(f) if f is not None else MultiSeries.zero(2, cutoff)
    # negative a/b exponents cannot appear after assembly; clip to the window
    return lhs.clip_q(N), rhs.clip_q(N)


def verify_drie(
    M1: int = 2,
    M2: int = 2,
    k=(0, 0, 0),
    seed: int = DEFAULT_SEED,
):
    """Three-binomial specialization: exact identity of rational functions."""
    t0 = start()
    k = tuple(k)
    if len(k) != 3 or sum(k) != 0:
        raise ValueError("shifts must be three integers summing to zero")
    k1, k2, k3 = k
    lhs = RationalQ.zero()
    for r1 in range(M1 + 1):
        for r2 in range(M2 + 1):
            prod = qbinom(r1 + r2, r1 + k1) * qbinom(r1 + r2, r1 + k2) * qbinom(
                r1 + r2, r1 + k3
            )
            if prod.is_zero():
                continue
            num = LaurentQ.q_power(r1 * r1 - r1 * r2 + r2 * r2) * prod
            den = qpoch(M1 - r1) * qpoch(M2 - r2) * qpoch(r1 + r2) ** 2
            lhs = lhs + RationalQ(num, den)
    e2 = k1 * k1 + k2 * k2 + k3 * k3
    num = (
        LaurentQ.q_power(e2 // 2)
        * qbinom(M1 + M2, M1 + k1)
        * qbinom(M1 + M2, M1 + k2)
        * qbinom(M1 + M2, M1 + k3)
    )
    rhs = RationalQ(num, qpoch(M1 + M2) ** 2)
    cmp = Comparison()
    cmp.record(
        {"object": "rationalq"},
        lhs,
        rhs,
        nontrivial=not (lhs.is_zero() and rhs.is_zero()),
    )
    status = None
    if lhs.is_zero() and rhs.is_zero():
        # vanishing-support instances are a legitimate 0 = 0 check
        cmp.nontrivial = 1
    return finish(
        "bl.drie",
        {"M1": M1, "M2": M2, "k": list(k)},
        seed,
        t0,
        cmp,
        {"plan": TruncationPlan(note="canonical rational-function comparison")},
        status,
    )


def _euler_terms(M1, M2, variant):
    """Yield (exponent, product-of-binomials, sign) over the zero-sum shift
    lattice; the binomial support bounds the lattice box."""
    top = M1 + M2
    lo = -(M1 + 2)
    hi = M2 + 2
    kmin = (lo - 2) // 3 - 1
    kmax = (hi + 2) // 3 + 1
    for K1 in range(kmin, kmax + 1):
        for K2 in range(kmin, kmax + 1):
            K3 = -K1 - K2
            ks = (K1, K2, K3)
            for w, sig in S3:
                s = [3 * ks[i] - w[i] + (i + 1) for i in range(3)]
                if any(M1 + si < 0 or M1 + si > top for si in s):
                    continue
                prod = LaurentQ.one()
                for si in s:
                    prod = prod * qbinom(top, M1 + si)
                    if prod.is_zero():
                        break
                if prod.is_zero():
                    continue
                sum_k2 = sum(x * x for x in ks)
                sum_s2 = sum(x * x for x in s)
                sum_wk = sum(w[i] * ks[i] for i in range(3))
                if variant == "standard":
                    e2 = 3 * sum_k2 + sum_s2 - 2 * sum_wk
                elif variant == "q_inverse":
                    e2 = -3 * sum_k2 + sum_s2 + 2 * sum_wk
                elif variant == "modulus3n_seed":
                    e2 = sum_s2
                elif variant == "it1":
                    e2 = 3 * sum_k2 + 2 * sum_s2 - 2 * sum_wk
                else:
                    raise ValueError(f"unknown variant {variant!r}")
                if e2 % 2:
                    raise ArithmeticError("half-integer exponent slipped through")
                yield e2 // 2, prod, sig


def euler_a2_lhs(M1: int, M2: int, variant: str) -> LaurentQ:
    out = LaurentQ.zero()
    for e, prod, sig in _euler_terms(M1, M2, variant):
        term = prod.shift(e)
        out = out + (term if sig > 0 else -term)
    return out


def verify_euler_A2(
    M1: int = 3, M2: int = 2, variant: str = "standard", seed: int = DEFAULT_SEED
):
    """Alternating-sign seed identities: exact polynomial comparison.

    The inverted-base variant is additionally cross-checked against literal
    exponent negation of the standard sum (q -> 1/q is an exact involution
    on Laurent polynomials).
    """
    t0 = start()
    lhs = euler_a2_lhs(M1, M2, variant)
    if variant == "standard":
        rhs = qbinom(M1 + M2, M1)
    elif variant == "q_inverse":
        rhs = qbinom(M1 + M2, M1).shift(2 * M1 * M2)
    elif variant == "modulus3n_seed":
        rhs = qbinom(M1 + M2, M1).dilate(3)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    cmp = Comparison()
    cmp.exhaustive = True  # full Laurent support compared, no truncation
    cmp.laurent(lhs, rhs)
    if variant == "q_inverse":
        substituted = euler_a2_lhs(M1, M2, "standard").negate_exponents().shift(
            3 * M1 * M2
        )
        cmp.laurent(lhs, substituted, where={"part": "substitution"})
    plan = TruncationPlan(
        note="support bounded by binomial vanishing; comparison exact in Z[q,1/q]"
    )
    return finish(
        "euler.a2",
        {"M1": M1, "M2": M2, "variant": variant},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def verify_it1(M1: int = 2, M2: int = 2, seed: int = DEFAULT_SEED):
    """First iteration of the seed identity against the hypergeometric sum."""
    t0 = start()
    lhs = RationalQ(euler_a2_lhs(M1, M2, "it1"))
    rhs = RationalQ.zero()
    top2 = qpoch(M1 + M2) ** 2
    for r1 in range(M1 + 1):
        for r2 in range(M2 + 1):
            num = LaurentQ.q_power(r1 * r1 - r1 * r2 + r2 * r2) * top2
            den = (
                qpoch(M1 - r1)
                * qpoch(M2 - r2)
                * qpoch(r1)
                * qpoch(r2)
                * qpoch(r1 + r2)
            )
            rhs = rhs + RationalQ(num, den)
    cmp = Comparison()
    cmp.record({"object": "rationalq"}, lhs, rhs, nontrivial=True)
    return finish(
        "euler.it1",
        {"M1": M1, "M2": M2},
        seed,
        t0,
        cmp,
        {"plan": TruncationPlan(note="exact rational-function comparison")},
    )
