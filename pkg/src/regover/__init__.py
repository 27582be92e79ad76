"""regover: truncated q-series arithmetic and congruence verification for
regular overpartitions and friends."""

from .arith import (
    chi,
    d_star,
    legendre,
    r_formula,
    r_oracle,
    sigma3_minus,
)
from .claims import (
    CongruenceClaim,
    IdentityClaim,
    Quantifier,
    Term,
    VerificationReport,
    ZERO,
    hunt,
    verify_claim,
    verify_congruence,
    verify_identity,
)
from .kernels import HAVE_COMPILED, backend_name
from .products import (
    EtaQuotientSpec,
    EtaSpecParseError,
    ThetaSpec,
    eta_quotient,
    euler_product,
    parse_eta_spec,
    phi,
    phi_five_dissection_residual,
    theta_f_product,
    theta_f_series,
)
from .registry import builtin_registry, regular_overpartition_quotient, verify_all
from .sequences import (
    SequenceRef,
    oracle_partition,
    oracle_regular_overpartition,
    sequence_series,
    sequence_table,
    sequence_value,
)
from .series import Ring, Series, ZZ, Zmod, congruent_up_to

__version__ = "0.1.0"

__all__ = [
    "CongruenceClaim",
    "EtaQuotientSpec",
    "EtaSpecParseError",
    "HAVE_COMPILED",
    "IdentityClaim",
    "Quantifier",
    "Ring",
    "SequenceRef",
    "Series",
    "Term",
    "ThetaSpec",
    "VerificationReport",
    "ZERO",
    "ZZ",
    "Zmod",
    "backend_name",
    "builtin_registry",
    "chi",
    "congruent_up_to",
    "d_star",
    "eta_quotient",
    "euler_product",
    "hunt",
    "legendre",
    "oracle_partition",
    "oracle_regular_overpartition",
    "parse_eta_spec",
    "phi",
    "phi_five_dissection_residual",
    "r_formula",
    "r_oracle",
    "regular_overpartition_quotient",
    "sequence_series",
    "sequence_table",
    "sequence_value",
    "sigma3_minus",
    "theta_f_product",
    "theta_f_series",
    "verify_all",
    "verify_claim",
    "verify_congruence",
    "verify_identity",
]
