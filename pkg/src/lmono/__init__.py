"""lmono: sign patterns of higher logarithmic derivatives of Dirichlet L-functions.

Numerically realizes, at desk scale, the machinery behind monotonicity
statements for L(s, chi) with chi a real primitive character: dual
representations of F^(k)(s) = (d/ds)^k log L(s, chi), verified zero lists,
threshold constants, density scans of derivative sign changes, sign
fingerprints, and synthetic zero-set constructions.
"""

from .characters import (
    RealPrimitiveCharacter,
    is_fundamental_discriminant,
    kronecker_symbol,
    parity,
    von_mangoldt,
)
from .errors import (
    ContourError,
    ConvergenceError,
    DominanceError,
    DomainError,
    EmptyListError,
    FormatError,
    GeometryError,
    LmonoError,
    NoFindingsError,
    PhaseError,
    PoleError,
    PrecisionError,
    SearchError,
    TailError,
    TieError,
)
from .lfunction import LPoint, completed_lambda, evaluate_L, z_function
from .logderiv import (
    DerivativeValue,
    NormalizedValue,
    eta_at,
    f_deriv_series,
    f_deriv_zerosum,
    f_prime_formula,
    g_normalized,
)
from .monotonicity import (
    UNCERTAIN,
    PaperConstants,
    SignFingerprint,
    compare_fingerprints,
    compute_constants,
    construct_offline_pair,
    fingerprint,
    l_of_s,
    scan_sign_changes,
    siegel_stability,
)
from .special import EulerMaclaurinParams, hurwitz_zeta
from .zeros import (
    SyntheticZeroSet,
    ZeroList,
    b_constant,
    count_check,
    load_zeros,
    lowest_zero,
    mark_complete,
    scan_zeros,
    store_zeros,
)

__version__ = "0.1.0"
