"""Exact cohomology of obstacle-avoiding configuration spaces.

Integer arithmetic in the one- and two-copy rings, straightening onto the
monomial basis, an independent linear-algebra oracle for every claimed
dimension, cup-length certificates for the kernel ideal, and the explicit
planar trivialization.
"""

from .algebra import (
    ONE_COPY,
    PLAIN,
    PRIMED,
    TWO_COPY,
    AlgebraContext,
    Element,
    Generator,
    Monomial,
    canonical_factors,
)
from .certificates import (
    DEFAULT_BUDGET,
    CupLengthCertificate,
    KernelIdeal,
    PtcResult,
    VanishingCheck,
    cup_length_bounds,
    delta_star,
    ideal_generators,
    ideal_power_vanishes,
    psi,
    psi_certificate,
    psi_factors,
    ptc_value,
    witness_monomial,
)
from .errors import (
    ConfcohomError,
    ConfigurationError,
    ContextMismatchError,
    OracleInconsistencyError,
    ParameterError,
    ParseError,
    SizeCapExceeded,
    UnsupportedCaseError,
    ZeroWitnessError,
)
from .normalform import (
    SPACES,
    admissible_sequences,
    basis_monomials,
    expand_constant_column,
    is_basis_monomial,
    poincare_polynomial,
    reduce_element,
)
from .oracle import (
    DEFAULT_CAP,
    OracleReport,
    StepReport,
    feasible_max_step,
    oracle_dimensions,
    oracle_project,
    sample_element,
    space_dimensions,
    verify_basis,
)
from .serialize import (
    element_from_obj,
    element_to_obj,
    element_to_text,
    parse_element_text,
)
from .trivialization import (
    DEFAULT_MIN_SEPARATION,
    trivialize,
    untrivialize,
)

__version__ = "1.0.0"

__all__ = [
    "AlgebraContext",
    "Element",
    "Generator",
    "Monomial",
    "ONE_COPY",
    "TWO_COPY",
    "PLAIN",
    "PRIMED",
    "canonical_factors",
    "SPACES",
    "admissible_sequences",
    "basis_monomials",
    "expand_constant_column",
    "is_basis_monomial",
    "poincare_polynomial",
    "reduce_element",
    "DEFAULT_CAP",
    "OracleReport",
    "StepReport",
    "feasible_max_step",
    "oracle_dimensions",
    "oracle_project",
    "sample_element",
    "space_dimensions",
    "verify_basis",
    "DEFAULT_BUDGET",
    "CupLengthCertificate",
    "KernelIdeal",
    "PtcResult",
    "VanishingCheck",
    "cup_length_bounds",
    "delta_star",
    "ideal_generators",
    "ideal_power_vanishes",
    "psi",
    "psi_certificate",
    "psi_factors",
    "ptc_value",
    "witness_monomial",
    "DEFAULT_MIN_SEPARATION",
    "trivialize",
    "untrivialize",
    "element_from_obj",
    "element_to_obj",
    "element_to_text",
    "parse_element_text",
    "ConfcohomError",
    "ConfigurationError",
    "ContextMismatchError",
    "OracleInconsistencyError",
    "ParameterError",
    "ParseError",
    "SizeCapExceeded",
    "UnsupportedCaseError",
    "ZeroWitnessError",
]
