"""Strip-sum identities from the recursion layer: the two-sided generating
identity, the constrained-column lemma with its closed form, and the
alternating 0/1-vector identity with its term-count law."""

from __future__ import annotations

from itertools import product as iproduct

from ..hall_littlewood import phi_coeff, psi_coeff
from ..laurent import LaurentQ
from ..partitions import (
    Partition,
    StripMask,
    conjugate,
    dot,
    n_stat,
    strips_over,
    strips_under,
)
from ..qseries import one_minus_qk
from ..series import MultiSeries
from ._base import DEFAULT_SEED, Comparison, TruncationPlan, finish, start


def verify_psiphi(
    lam: Partition = Partition((2, 1)),
    mu: Partition = Partition((1,)),
    D_z: int = 4,
    N: int = 20,
    seed: int = DEFAULT_SEED,
):
    """Growth-over-mu sum equals shrink-under-lam sum, coefficientwise in z.

    Each z-coefficient is a finite Laurent polynomial on both sides, so the
    comparison is exact; N is recorded as the certified window.
    """
    t0 = start()
    lc = conjugate(lam)
    mc = conjugate(mu)
    cmp = Comparison()
    shrink = [(nu, lam.weight - nu.weight) for nu in strips_under(lam)]
    for j in range(D_z + 1):
        lhs = LaurentQ.zero()
        for nu in strips_over(mu, j):
            e = n_stat(lam) + n_stat(nu) - dot(lc, conjugate(nu))
            lhs = lhs + psi_coeff(nu, mu).shift(e)
        rhs = LaurentQ.zero()
        for nu, boxes in shrink:
            if boxes > j:
                continue
            e = n_stat(mu) + n_stat(nu) - dot(mc, conjugate(nu)) - boxes
            rhs = rhs + phi_coeff(lam, nu).shift(e)
        cmp.laurent(lhs, rhs, where={"z_power": j}, force_nontrivial=j > 0)
    plan = TruncationPlan(
        x_degree=D_z,
        q_max=N,
        note="per z-power both sides are finite; compared exactly",
    )
    return finish(
        "proof.psiphi",
        {"lam": lam, "mu": mu, "D_z": D_z, "N": N},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def lemma41_closed_form(mu: Partition, mask: StripMask, j: int) -> LaurentQ:
    """Coefficient of z^j in the constrained strip sum's closed form."""
    k = len(mask)
    w = mask.weight
    if j < w:
        return LaurentQ.zero()
    base = LaurentQ.q_power(n_stat(mu) + dot(conjugate(mu), mask))
    for jj in mask.ascent_set():
        base = base * one_minus_qk(mu.multiplicity(jj))
    if j == w or mask[k - 1] == 1:
        return base
    return base * (LaurentQ.one() - LaurentQ.q_power(conjugate(mu).part(k)))


def verify_lemma41(
    mu: Partition = Partition((2, 2, 1)),
    mask=None,
    D_z: int = 4,
    N: int = 20,
    seed: int = DEFAULT_SEED,
):
    """Column-constrained strip sums against the closed form.

    mask = None checks the unconstrained case, whose closed form is a bare
    geometric series.
    """
    t0 = start()
    if mask is not None and not isinstance(mask, StripMask):
        mask = StripMask(mask)
    cmp = Comparison()
    for j in range(D_z + 1):
        lhs = LaurentQ.zero()
        for lam in strips_over(mu, j, prefix=mask):
            lhs = lhs + psi_coeff(lam, mu).shift(n_stat(lam))
        if mask is None:
            rhs = LaurentQ.q_power(n_stat(mu))
        else:
            rhs = lemma41_closed_form(mu, mask, j)
        cmp.laurent(lhs, rhs, where={"z_power": j}, force_nontrivial=j > 0)
    plan = TruncationPlan(
        x_degree=D_z,
        q_max=N,
        note="strip enumeration finite per box count; compared exactly",
    )
    return finish(
        "proof.lemma41",
        {"mu": mu, "mask": mask if mask is not None else "none", "D_z": D_z, "N": N},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def pell_count(k: int) -> int:
    """Closed-form term count via the integer recurrence T' = 2T + T''."""
    prev, cur = 0, 1
    for _ in range(k + 1):
        prev, cur = cur, 2 * cur + prev
    return prev


def _descents(bits, upto):
    return [i for i in range(upto) if bits[i] > bits[i + 1]]


def _ascents(bits, upto):
    return [i for i in range(upto) if bits[i] < bits[i + 1]]


def verify_ab2(k: int = 4, convention: str = "without", seed: int = DEFAULT_SEED):
    """The alternating 0/1-vector identity in 2k variables, after clearing
    denominators, together with the term-count law.

    convention "with_k_in_I" builds the descent set with the final-position
    rule and then excludes that position from the product, which is how the
    split form is stated; the resulting product coincides with "without".
    """
    t0 = start()
    if convention not in ("without", "with_k_in_I"):
        raise ValueError(f"unknown convention {convention!r}")
    nv = 2 * k  # a_1..a_k then b_1..b_k
    lhs = MultiSeries.zero(nv)
    rhs = MultiSeries.zero(nv)
    lhs_terms = 0
    rhs_terms = 0
    for bits in iproduct((0, 1), repeat=k):
        # growth side: ascents consume the cleared copy of a_(j+1)
        J = _ascents(bits, k - 1)
        lhs_terms += 2 ** len(J)
        e = [0] * nv
        for i in range(k):
            e[i] = bits[i] + (1 if i >= 1 else 0) - (1 if i - 1 in J else 0)
            e[k + i] = 1 - bits[i]
        term = MultiSeries.monomial(nv, e)
        for j in J:
            term = term.mul(_diff(nv, j + 1, j))
        lhs = lhs + term

        # shrink side: descents consume the cleared copy of b_(i+1)
        I = _descents(bits, k - 1)
        if convention == "with_k_in_I":
            I_full = I + ([k - 1] if bits[k - 1] == 1 else [])
            I = [i for i in I_full if i != k - 1]
        rhs_terms += 2 ** len(I)
        e = [0] * nv
        for i in range(k):
            e[i] = bits[i] + (1 if i >= 1 else 0)
            e[k + i] = (1 - bits[i]) - (1 if i - 1 in I else 0)
        term = MultiSeries.monomial(nv, e)
        for i in I:
            term = term.mul(_diff(nv, k + i + 1, k + i))
        rhs = rhs + term

    cmp = Comparison()
    matched = lhs == rhs
    cmp.record(
        {"object": "cleared multivariate polynomials"},
        "equal" if matched else "lhs",
        "equal" if matched else "rhs",
        nontrivial=True,
    )
    expected = pell_count(k)
    cmp.record({"object": "lhs term count"}, lhs_terms, expected, nontrivial=True)
    cmp.record({"object": "rhs term count"}, rhs_terms, expected, nontrivial=True)
    plan = TruncationPlan(
        note="denominators cleared by prod(b_i) * prod(a_2..a_k); exact comparison"
    )
    return finish(
        "proof.ab2",
        {"k": k, "convention": convention, "term_count": lhs_terms},
        seed,
        t0,
        cmp,
        {"plan": plan},
    )


def _diff(nv: int, hi: int, lo: int) -> MultiSeries:
    """The binomial x_hi - x_lo (0-based variable indices)."""
    ehi = [0] * nv
    ehi[hi] = 1
    elo = [0] * nv
    elo[lo] = 1
    return MultiSeries(nv, None, {tuple(ehi): 1, tuple(elo): -1})
