"""The rank-two Rogers-Ramanujan identities, the classical pair, the
specialized theta-style sum-product identity and the three modulus families."""

from __future__ import annotations

from ..hall_littlewood import b_poly
from ..laurent import LaurentQ
from ..partitions import conjugate, dot, partitions_up_to
from ..qseries import eta_quotient, inv_series, qbinom, qpoch, qpoch_inf
from ._base import DEFAULT_SEED, Comparison, TruncationPlan, finish, start

S3_SIGNED = [
    ((1, 2, 3), 1),
    ((1, 3, 2), -1),
    ((2, 1, 3), -1),
    ((2, 3, 1), 1),
    ((3, 1, 2), 1),
    ((3, 2, 1), -1),
]


def rr_a2_triple_sum(N: int) -> LaurentQ:
    """The double sum with the three-Pochhammer denominator, to order N.

    The quadratic exponent dominates half the norm, so pairs with
    (n1^2 + n2^2)/2 > N cannot touch the window.
    """
    out = LaurentQ.zero()
    n1 = 0
    while n1 * n1 <= 2 * N:
        n2 = 0
        while n1 * n1 + n2 * n2 <= 2 * N:
            e = n1 * n1 - n1 * n2 + n2 * n2
            if e <= N:
                den = qpoch(n1) * qpoch(n2) * qpoch(n1 + n2)
                out = out + inv_series(den, N - e).shift(e)
            n2 += 1
        n1 += 1
    return out.truncate(N)


def rr_a2_binomial_sum(N: int) -> LaurentQ:
    """The equivalent single-Pochhammer form with a Gaussian binomial."""
    out = LaurentQ.zero()
    n1 = 0
    while n1 * n1 <= 2 * N:
        n2 = 0
        while n1 * n1 + n2 * n2 <= 2 * N:
            e = n1 * n1 - n1 * n2 + n2 * n2
            if e <= N and n2 <= 2 * n1:
                coeff = qbinom(2 * n1, n2)
                term = inv_series(qpoch(n1), N - e).mul_trunc(coeff, N - e)
                out = out + term.shift(e)
            n2 += 1
        n1 += 1
    return out.truncate(N)


def rr_a2_product(N: int) -> LaurentQ:
    """The modulus-7 infinite product."""
    return eta_quotient(7, [(1, -2), (3, -1), (4, -1), (6, -2)], N)


def verify_rr_a2(N: int = 60, seed: int = DEFAULT_SEED):
    """Pairwise equality of the three expressions through order N.

    The first equality also confirms numerically the terminating
    transformation that links the two sum forms.
    """
    t0 = start()
    e1 = qpoch_inf(N).mul_trunc(rr_a2_triple_sum(N), N)
    e2 = rr_a2_binomial_sum(N)
    e3 = rr_a2_product(N)
    cmp = Comparison()
    cmp.laurent(e1, e2, q_max=N, where={"pair": "sum3=sum1binom"})
    cmp.laurent(e1, e3, q_max=N, where={"pair": "sum3=product"})
    plan = TruncationPlan(
        q_min=0,
        q_max=N,
        note="pairs dropped only when (n1^2+n2^2)/2 > N; quadratic form dominates",
    )
    return finish("rr.a2", {"N": N}, seed, t0, cmp, {"plan": plan})


def verify_rr_classical(N: int = 60, which: str = "both", seed: int = DEFAULT_SEED):
    """The classical pair: quadratic-exponent sums vs modulus-5 products."""
    t0 = start()
    cmp = Comparison()
    if which in ("1", "both"):
        s = LaurentQ.zero()
        n = 0
        while n * n <= N:
            s = s + inv_series(qpoch(n), N - n * n).shift(n * n)
            n += 1
        cmp.laurent(
            s.truncate(N),
            eta_quotient(5, [(1, -1), (4, -1)], N),
            q_max=N,
            where={"pair": "first"},
        )
    if which in ("2", "both"):
        s = LaurentQ.zero()
        n = 0
        while n * (n + 1) <= N:
            s = s + inv_series(qpoch(n), N - n * (n + 1)).shift(n * (n + 1))
            n += 1
        cmp.laurent(
            s.truncate(N),
            eta_quotient(5, [(2, -1), (3, -1)], N),
            q_max=N,
            where={"pair": "second"},
        )
    plan = TruncationPlan(q_min=0, q_max=N, note="summands start at the quadratic exponent")
    return finish(
        "rr.classical", {"N": N, "which": which}, seed, t0, cmp, {"plan": plan}
    )


def _theta_lhs(n: int, N: int) -> LaurentQ:
    """Specialized alternating lattice sum for modulus p = 3n+1.

    Terms are exact Laurent polynomials; the shell bound below certifies that
    excluded lattice points cannot reach exponents <= N.
    """
    p = 3 * n + 1

    def shell_lower_bound(K):
        # quadratic base >= (3p/2)(3/2)K^2 - 6K; expansion of the three
        # correction factors can lower an exponent by at most 6n + 6pK
        return (9 * p * K * K) // 4 - 6 * K - 6 * n - 6 * p * K

    K = 2
    while shell_lower_bound(K) <= N:
        K += 1
    out = LaurentQ.zero()
    for k1 in range(-K, K + 1):
        for k2 in range(-K, K + 1):
            k3 = -k1 - k2
            if abs(k3) > K:
                continue
            ks = (k1, k2, k3)
            e2 = 0
            for i, ki in enumerate(ks, start=1):
                e2 += 6 * n * i * ki + 3 * p * ki * ki - 2 * p * i * ki
            if e2 % 2:
                raise ArithmeticError("half-integer exponent in the theta sum")
            term = LaurentQ.q_power(e2 // 2)
            for i in range(3):
                for j in range(i + 1, 3):
                    expo = n * (j - i) + p * (ks[j] - ks[i])
                    term = term * LaurentQ.from_terms([(0, 1), (expo, -1)])
            out = out + term
    return out.truncate(N)


def _theta_rhs(n: int, N: int) -> LaurentQ:
    """Product side: squared full product times the six specialized factors."""
    p = 3 * n + 1
    residues = [(p, 2)]
    for d in (n, 2 * n, n):
        residues.append((d, 1))
        residues.append((p - d, 1))
    return eta_quotient(p, residues, N)


def verify_macdonald_A2(
    N: int = 80, instance: str = "modulus7", seed: int = DEFAULT_SEED
):
    """Alternating rank-two lattice sum against its product form, after the
    geometric specialization; the three-variable alternating-determinant
    sub-identity is checked exactly alongside."""
    t0 = start()
    if instance == "modulus7":
        n = 2
    elif instance.startswith("general"):
        n = int(instance[len("general") :].strip("()") or 2)
    else:
        raise ValueError(f"unknown instance {instance!r}")
    cmp = Comparison()
    cmp.laurent(_theta_lhs(n, N), _theta_rhs(n, N), q_max=N, where={"part": "theta"})
    _vandermonde_check(cmp)
    plan = TruncationPlan(
        q_min=0,
        q_max=N,
        note="lattice shells excluded only when a provable lower bound exceeds N",
    )
    return finish(
        "macdonald.a2", {"N": N, "instance": instance}, seed, t0, cmp, {"plan": plan}
    )


def _vandermonde_check(cmp: Comparison):
    """Alternating sum over S3 equals the pair product, as an exact
    three-variable Laurent identity (cleared by x1^2 x2)."""
    from ..series import MultiSeries

    lhs = MultiSeries.zero(3)
    for w, sig in S3_SIGNED:
        e = tuple((i + 1) - w[i] for i in range(3))
        cleared = (e[0] + 2, e[1] + 1, e[2])
        lhs = lhs + MultiSeries.monomial(3, cleared, sig)
    rhs = MultiSeries.one(3)
    for u, v in ((0, 1), (0, 2), (1, 2)):
        eu = [0] * 3
        eu[u] = 1
        ev = [0] * 3
        ev[v] = 1
        rhs = rhs.mul(
            MultiSeries(3, None, {tuple(eu): 1, tuple(ev): -1})
        )
    matched = lhs == rhs
    cmp.record(
        {"part": "vandermonde", "cleared_by": "x1^2*x2"},
        "equal" if matched else repr(lhs),
        "equal" if matched else repr(rhs),
        nontrivial=True,
    )


_FAMILY_RESIDUES = {
    "3n+1": lambda n: (3 * n + 1, [(n, 2), (n + 1, 1), (2 * n, 1), (2 * n + 1, 2), (3 * n + 1, 2)]),
    "3n-1": lambda n: (3 * n - 1, [(n - 1, 1), (n, 2), (2 * n - 1, 2), (2 * n, 1), (3 * n - 1, 2)]),
    "3n": lambda n: (3 * n, [(n, 3), (2 * n, 3), (3 * n, 2)]),
}


def modulus_family_lhs(n: int, variant: str, N: int) -> LaurentQ:
    """Bounded-length double partition sum for the modulus families."""
    out = LaurentQ.zero()
    wmax = 1
    while wmax * wmax <= 2 * N * (n - 1):
        wmax += 1
    pool = [
        p
        for p in partitions_up_to(wmax, max_length=n - 1)
        if dot(p, p) <= 2 * N
    ]
    for lam in pool:
        ll = dot(lam, lam)
        la = lam.part(n - 1)
        bl = b_poly(conjugate(lam))
        for mu in pool:
            e = ll + dot(mu, mu) - dot(lam, mu)
            mb = mu.part(n - 1)
            if variant == "3n-1":
                e += 2 * la * mb
            if e > N or ll + dot(mu, mu) > 2 * N:
                continue
            den = bl * b_poly(conjugate(mu))
            if variant == "3n":
                num = qpoch(la) * qpoch(mb) * qbinom(la + mb, la).dilate(3)
                den = den * qpoch(la + mb) ** 2
                term = num.mul_trunc(inv_series(den, N - e), N - e)
            else:
                den = den * qpoch(la + mb)
                term = inv_series(den, N - e)
            out = out + term.shift(e)
    return out.truncate(N)


def modulus_family_rhs(n: int, variant: str, N: int) -> LaurentQ:
    p, residues = _FAMILY_RESIDUES[variant](n)
    numerator = eta_quotient(p, residues, N)
    return numerator.mul_trunc(inv_series(qpoch_inf(N) ** 3, N), N)


def verify_modulus_family(
    n: int = 2, variant: str = "3n+1", N: int = 40, seed: int = DEFAULT_SEED
):
    """Length-bounded double partition sums against the stated eta quotients."""
    t0 = start()
    if variant not in _FAMILY_RESIDUES:
        raise ValueError(f"unknown variant {variant!r}")
    if n < 2:
        raise ValueError("the families need n >= 2")
    lhs = modulus_family_lhs(n, variant, N)
    rhs = modulus_family_rhs(n, variant, N)
    cmp = Comparison()
    cmp.laurent(lhs, rhs, q_max=N)
    plan = TruncationPlan(
        q_min=0,
        q_max=N,
        note=(
            "pairs dropped only when <lam,lam>+<mu,mu> > 2N; the quadratic "
            "form dominates half the norm and the cross/linear corrections "
            "are non-negative"
        ),
    )
    return finish(
        f"family.{variant}", {"n": n, "variant": variant, "N": N}, seed, t0, cmp, {"plan": plan}
    )
