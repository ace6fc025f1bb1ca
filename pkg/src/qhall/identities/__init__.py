"""Identity catalog: one verification routine per identity, each returning a
structured VerifyReport."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..partitions import Partition, StripMask
from .bailey import (
    r_m_series,
    verify_bailey_BL,
    verify_drie,
    verify_euler_A2,
    verify_it1,
    verify_lemma_inv,
)
from .hua import verify_hua
from .prooflayer import pell_count, verify_ab2, verify_lemma41, verify_psiphi
from .rr import (
    modulus_family_lhs,
    modulus_family_rhs,
    rr_a2_binomial_sum,
    rr_a2_product,
    rr_a2_triple_sum,
    verify_macdonald_A2,
    verify_modulus_family,
    verify_rr_a2,
    verify_rr_classical,
)
from .section6 import (
    verify_a3_isolated,
    verify_an_ext,
    verify_fulman,
    verify_npsom2,
    verify_psiqt,
    verify_st,
    verify_st2,
    verify_stem,
    verify_thmpf,
)
from .theorem_main import (
    ansum_lhs,
    verify_cor1,
    verify_cor2,
    verify_cor3,
    verify_cor4,
    verify_hall,
    verify_main,
)

_SECTION6 = {
    "npsom2": verify_npsom2,
    "psiqt": verify_psiqt,
    "an_ext": verify_an_ext,
    "a3": verify_a3_isolated,
    "stem": verify_stem,
    "thmpf": verify_thmpf,
    "st": verify_st,
    "st2": verify_st2,
    "fulman": verify_fulman,
}


def verify_section6(item: str, **params):
    """Dispatch to one of the outlook-layer checks by item name."""
    try:
        fn = _SECTION6[item]
    except KeyError:
        raise ValueError(
            f"unknown item {item!r}; choose from {sorted(_SECTION6)}"
        ) from None
    return fn(**params)


@dataclass(frozen=True)
class IdentityEntry:
    identity_id: str
    anchor: str
    runner: Callable
    defaults: dict = field(default_factory=dict)
    cli: dict = field(default_factory=dict)

    def run(self, **params):
        merged = {**self.defaults, **params}
        return self.runner(**merged)


def _p(s: str) -> Partition:
    return Partition.from_string(s)


CATALOG = [
    IdentityEntry(
        "pid.main",
        "two-alphabet Hall-Littlewood sum = product (rank-two main theorem)",
        verify_main,
        {"n": 2, "m": 2, "D": 4},
        {"vars": ("n", "m"), "xdeg": "D"},
    ),
    IdentityEntry(
        "cor1.skew",
        "skew one-alphabet extension of the main sum",
        verify_cor1,
        {"nu": _p("1"), "n": 2, "m": 2, "D": 4},
        {"vars": ("n", "m"), "xdeg": "D", "partitions": ("nu",)},
    ),
    IdentityEntry(
        "cor2.skewq",
        "doubly-skew extension with shifted-argument skew Q",
        verify_cor2,
        {"nu": _p("1"), "eta": _p("1"), "n": 2, "m": 2, "D": 4},
        {"vars": ("n", "m"), "xdeg": "D", "partitions": ("nu", "eta")},
    ),
    IdentityEntry(
        "cor3.linear",
        "linear exponent correction to the single-alphabet sum",
        verify_cor3,
        {"j": 1, "n": 2, "D": 5},
        {"vars": ("n",), "xdeg": "D", "params": ("j",)},
    ),
    IdentityEntry(
        "cor3.hall",
        "Hall's bounded q-series identity (and its stable limit)",
        verify_hall,
        {"k": 3, "j": 1, "n": 3, "N": 30},
        {"degree": "N", "params": ("k", "j", "n")},
    ),
    IdentityEntry(
        "cor4.pps",
        "doubly-bounded principal specialization = Pochhammer quotient",
        verify_cor4,
        {"n": 2, "m": 1, "deg_a": 4, "deg_b": 4, "N": 20},
        {"vars": ("n", "m"), "degree": "N", "params": ("deg_a", "deg_b")},
    ),
    IdentityEntry(
        "hua.an",
        "Hua's positive-root product identity for partition chains",
        verify_hua,
        {"rank": 2, "degree": 3, "N": 12},
        {"degree": "N", "params": ("rank", "degree")},
    ),
    IdentityEntry(
        "inv.lemma",
        "invariance of the bounded chain sum under the quadratic kernel",
        verify_lemma_inv,
        {"M1": 1, "M2": 1, "deg_a": 4, "deg_b": 4, "N": 20},
        {"bound": ("M1", "M2"), "degree": "N", "params": ("deg_a", "deg_b")},
    ),
    IdentityEntry(
        "bl.bailey",
        "two-bound rank-two transformation identity",
        verify_bailey_BL,
        {"M1": 2, "M2": 1, "strategy": "random_points", "points": 20},
        {"bound": ("M1", "M2"), "strategy": "strategy", "params": ("points", "deg", "N")},
    ),
    IdentityEntry(
        "bl.typeii",
        "shifted form of the two-bound transformation",
        verify_bailey_BL,
        {"M1": 2, "M2": 1, "k": (1, 0, -1), "strategy": "random_points", "points": 20},
        {
            "bound": ("M1", "M2"),
            "strategy": "strategy",
            "shift": "k",
            "params": ("points", "deg", "N"),
        },
    ),
    IdentityEntry(
        "bl.drie",
        "three-binomial specialization of the shifted transformation",
        verify_drie,
        {"M1": 2, "M2": 2, "k": (1, 0, -1)},
        {"bound": ("M1", "M2"), "shift": "k"},
    ),
    IdentityEntry(
        "euler.a2",
        "alternating-sign binomial seed identity (three variants)",
        verify_euler_A2,
        {"M1": 3, "M2": 2, "variant": "standard"},
        {"bound": ("M1", "M2"), "variant": "variant"},
    ),
    IdentityEntry(
        "euler.it1",
        "first iteration of the seed identity",
        verify_it1,
        {"M1": 2, "M2": 2},
        {"bound": ("M1", "M2")},
    ),
    IdentityEntry(
        "rr.a2",
        "rank-two Rogers-Ramanujan identity (modulus 7), three expressions",
        verify_rr_a2,
        {"N": 40},
        {"degree": "N"},
    ),
    IdentityEntry(
        "rr.classical",
        "the two classical Rogers-Ramanujan identities (modulus 5)",
        verify_rr_classical,
        {"N": 40, "which": "both"},
        {"degree": "N", "variant": "which"},
    ),
    IdentityEntry(
        "macdonald.a2",
        "rank-two theta-style sum-product identity, specialized",
        verify_macdonald_A2,
        {"N": 50, "instance": "modulus7"},
        {"degree": "N", "variant": "instance"},
    ),
    IdentityEntry(
        "family.3n+1",
        "modulus 3n+1 Rogers-Ramanujan-type family",
        verify_modulus_family,
        {"n": 2, "variant": "3n+1", "N": 30},
        {"vars": ("n",), "degree": "N"},
    ),
    IdentityEntry(
        "family.3n-1",
        "modulus 3n-1 Rogers-Ramanujan-type family",
        verify_modulus_family,
        {"n": 2, "variant": "3n-1", "N": 30},
        {"vars": ("n",), "degree": "N"},
    ),
    IdentityEntry(
        "family.3n",
        "modulus 3n Rogers-Ramanujan-type family (base-cubed binomial)",
        verify_modulus_family,
        {"n": 2, "variant": "3n", "N": 30},
        {"vars": ("n",), "degree": "N"},
    ),
    IdentityEntry(
        "proof.psiphi",
        "two-sided horizontal-strip generating identity",
        verify_psiphi,
        {"lam": _p("2,1"), "mu": _p("1"), "D_z": 4, "N": 20},
        {"degree": "N", "xdeg": "D_z", "partitions": ("lam", "mu")},
    ),
    IdentityEntry(
        "proof.lemma41",
        "column-constrained strip sum with closed form",
        verify_lemma41,
        {"mu": _p("2,2,1"), "mask": StripMask((0, 1)), "D_z": 4, "N": 20},
        {"degree": "N", "xdeg": "D_z", "partitions": ("mu",), "mask": "mask"},
    ),
    IdentityEntry(
        "proof.ab2",
        "alternating 0/1-vector identity with Pell-type term counts",
        verify_ab2,
        {"k": 4, "convention": "without"},
        {"variant": "convention", "params": ("k",)},
    ),
    IdentityEntry(
        "s6.npsom2",
        "two-parameter single-alphabet sum (only its one-parameter shadow)",
        verify_npsom2,
        {"n": 2, "D": 4},
        {"vars": ("n",), "xdeg": "D"},
    ),
    IdentityEntry(
        "s6.psiqt",
        "two-parameter strip sum with hook normalizers, per z-power",
        verify_psiqt,
        {"mu": _p("1"), "D_z": 2, "points": 10},
        {"xdeg": "D_z", "partitions": ("mu",), "params": ("points",)},
    ),
    IdentityEntry(
        "s6.an_ext",
        "chain sum with geometric middle alphabets, closed product form",
        verify_an_ext,
        {"rank": 3, "D": 3, "N": 10},
        {"xdeg": "D", "degree": "N", "params": ("rank", "nx", "ny")},
    ),
    IdentityEntry(
        "s6.a3",
        "isolated rank-three identity with two geometric end alphabets",
        verify_a3_isolated,
        {"D": 3, "N": 10},
        {"xdeg": "D", "degree": "N", "params": ("nx",)},
    ),
    IdentityEntry(
        "s6.stem",
        "signed-reflection closed forms for bounded-largest-part sums",
        verify_stem,
        {"n": 2, "kmax": 2, "points": 5},
        {"vars": ("n",), "params": ("kmax", "points")},
    ),
    IdentityEntry(
        "s6.thmpf",
        "subset closed form for the weighted bounded-largest-part sum",
        verify_thmpf,
        {"n": 2, "kmax": 2, "points": 5},
        {"vars": ("n",), "params": ("kmax", "points")},
    ),
    IdentityEntry(
        "s6.st",
        "bounded doubled-partition sum at the half-power geometric point",
        verify_st,
        {"n": 2, "k": 2, "D_z": 4},
        {"vars": ("n",), "xdeg": "D_z", "params": ("k",)},
    ),
    IdentityEntry(
        "s6.st2",
        "bounded weighted sum at the geometric point, with coincidence check",
        verify_st2,
        {"n": 2, "k": 2, "D_z": 4},
        {"vars": ("n",), "xdeg": "D_z", "params": ("k",)},
    ),
    IdentityEntry(
        "s6.fulman",
        "stable limit of the bounded identity at the two geometric points",
        verify_fulman,
        {"k": 2, "N": 25},
        {"degree": "N", "params": ("k",)},
    ),
]

BY_ID = {e.identity_id: e for e in CATALOG}


def get_entry(identity_id: str) -> IdentityEntry:
    try:
        return BY_ID[identity_id]
    except KeyError:
        raise KeyError(
            f"unknown identity {identity_id!r}; run the list command for the catalog"
        ) from None


__all__ = [
    "CATALOG",
    "BY_ID",
    "IdentityEntry",
    "get_entry",
    "ansum_lhs",
    "pell_count",
    "r_m_series",
    "rr_a2_binomial_sum",
    "rr_a2_product",
    "rr_a2_triple_sum",
    "modulus_family_lhs",
    "modulus_family_rhs",
    "verify_main",
    "verify_cor1",
    "verify_cor2",
    "verify_cor3",
    "verify_hall",
    "verify_cor4",
    "verify_hua",
    "verify_lemma_inv",
    "verify_bailey_BL",
    "verify_drie",
    "verify_euler_A2",
    "verify_it1",
    "verify_rr_a2",
    "verify_rr_classical",
    "verify_macdonald_A2",
    "verify_modulus_family",
    "verify_psiphi",
    "verify_lemma41",
    "verify_ab2",
    "verify_section6",
    "verify_npsom2",
    "verify_psiqt",
    "verify_an_ext",
    "verify_a3_isolated",
    "verify_stem",
    "verify_thmpf",
    "verify_st",
    "verify_st2",
    "verify_fulman",
]
