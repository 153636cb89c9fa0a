"""Mignotte secret sharing over the Gaussian integers.

Remainders are taken in the half-open fundamental square of the modulus,
which makes reduction unique and the scheme correct.
"""

from .access import (
    AccessStructure,
    LogWeightedThreshold,
    WeightedThreshold,
    coalition_norm,
    enumerate_structure,
    gen_threshold_params,
    realize,
    realize_with,
    threshold_structure,
    weighted_representation,
)
from .counting import (
    AuditReport,
    audit,
    gauss_count,
    information_rate,
    leakage_bound,
    leakage_exact,
    secret_space_size,
)
from .crt import Congruence, CrtSolution, solve_pair, solve_system
from .errors import (
    DegenerateStructure,
    EmptySystem,
    EnumerationTooLarge,
    GaussMigError,
    Inconsistent,
    InvalidParams,
    InvalidSecret,
    NotPairwiseCoprime,
    SearchExhausted,
    TooManyParticipants,
)
from .gint import (
    DivResult,
    DomainKind,
    GaussianInt,
    canonical_associate,
    divrem_principal,
    egcd,
    gcd,
    in_domain,
    is_unit,
    lcm,
    lcm_all,
    mod_principal,
    norm,
)
from .scheme import (
    Reconstruction,
    SchemeParams,
    Share,
    ValidationReport,
    deal,
    naive_reconstruct,
    reconstruct,
    sample_secret,
    secret_space_contains,
    validate_params,
)

__version__ = "0.1.0"
