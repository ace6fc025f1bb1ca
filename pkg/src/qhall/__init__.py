"""qhall: exact-arithmetic Hall-Littlewood polynomials and q-series identity
verification.

Everything is exact: big-integer Laurent polynomials in q, total-degree
truncated multivariate series, reduced rational functions, and exact rational
sample points. No floating point anywhere.
"""

from .bivariate import QTFraction, QTPoly
from .hall_littlewood import (
    HLPolynomial,
    b_poly,
    hl_P,
    hl_P_skew,
    hl_P_symmetrization,
    hl_Q,
    hl_Q_skew,
    phi_coeff,
    psi_coeff,
    skew_P_single,
    skew_Q_single,
    spec_principal_P,
    spec_principal_P_infinite,
    spec_principal_Q_infinite,
)
from .kernels import BACKEND as KERNEL_BACKEND
from .laurent import LaurentQ, Q
from .macdonald import arm, leg, macdonald_cprime, macdonald_phi, macdonald_psi
from .partitions import (
    EMPTY,
    Partition,
    StripMask,
    conjugate,
    dot,
    enumerate_partitions,
    is_horizontal_strip,
    multiplicity,
    n_stat,
    partitions_up_to,
    strips_over,
    strips_under,
)
from .points import DEFAULT_SEED, RationalPoint, eval_exact, sample_point
from .qrational import RationalQ
from .qseries import (
    eta_quotient,
    inv_series,
    poch_at,
    qbinom,
    qpoch,
    qpoch_at,
    qpoch_inf,
)
from .reports import TruncationPlan, VerifyReport
from .series import MultiSeries, exact_div, geometric_inverse, series_inverse

__version__ = "0.1.0"
