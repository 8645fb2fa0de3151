"""Effective criteria for prime-characteristic singularities of pairs:
purity tests through ideal-theoretic splitting conditions, generalized
test ideals over regular ambients, Frobenius-closure witness checks, and
F-pure-threshold estimation with rationality certificates.
"""

from .ceilarith import (
    AuditReport,
    ThresholdExponent,
    audit_inequalities,
    ceil_mul,
    denominator_order,
    floor_mul,
)
from .closure import (
    ClosureVerdict,
    default_e_range,
    power_into_closure_check,
    sharp_frobenius_membership,
    sharp_multiplier_check,
    tight_closure_witness_check,
)
from .errors import (
    ExponentOverflowError,
    NonMonomialIdealError,
    ParseError,
    ResourceCapExceeded,
    RingMismatchError,
)
from .field import PrimeField
from .fpt import (
    FptCertificate,
    FptEstimate,
    NuRecord,
    fpt_bounds,
    fpt_estimate,
    nu_table,
    nu_value,
    threshold_consistency,
)
from .ideals import (
    EngineLimits,
    Ideal,
    bracket_power,
    colon,
    groebner_basis,
    ideal_contains,
    ideal_equals,
    ideal_power,
    intersect,
    membership,
    root_power,
)
from .parser import (
    parse_poly,
    parse_poly_list,
    parse_rational,
    parse_ring,
    poly_to_str,
    read_poly_file,
)
from .poly import PolyRing, SparsePolynomial, frobenius_image, poly_mul, poly_pow
from .purity import (
    PairSpec,
    PurityVerdict,
    classic_fpure,
    maximal_ideal,
    principal_sharp_implies_classic,
    sharp_fedder,
    sharp_from_single_split,
    strong_fedder,
    verify_witness,
)
from .report import ConsistencyReport
from .testideal import (
    TestIdealResult,
    is_radical_monomial,
    quotient_fpure_check,
    radical_probe,
    test_ideal,
    vassilev_containment,
)

__all__ = [
    "AuditReport",
    "ClosureVerdict",
    "ConsistencyReport",
    "EngineLimits",
    "ExponentOverflowError",
    "FptCertificate",
    "FptEstimate",
    "Ideal",
    "NonMonomialIdealError",
    "NuRecord",
    "PairSpec",
    "ParseError",
    "PolyRing",
    "PrimeField",
    "PurityVerdict",
    "ResourceCapExceeded",
    "RingMismatchError",
    "SparsePolynomial",
    "TestIdealResult",
    "ThresholdExponent",
    "audit_inequalities",
    "bracket_power",
    "ceil_mul",
    "classic_fpure",
    "colon",
    "default_e_range",
    "denominator_order",
    "floor_mul",
    "fpt_bounds",
    "fpt_estimate",
    "frobenius_image",
    "groebner_basis",
    "ideal_contains",
    "ideal_equals",
    "ideal_power",
    "intersect",
    "is_radical_monomial",
    "maximal_ideal",
    "membership",
    "nu_table",
    "nu_value",
    "parse_poly",
    "parse_poly_list",
    "parse_rational",
    "parse_ring",
    "poly_mul",
    "poly_pow",
    "poly_to_str",
    "power_into_closure_check",
    "principal_sharp_implies_classic",
    "quotient_fpure_check",
    "radical_probe",
    "read_poly_file",
    "root_power",
    "sharp_fedder",
    "sharp_frobenius_membership",
    "sharp_from_single_split",
    "sharp_multiplier_check",
    "strong_fedder",
    "test_ideal",
    "threshold_consistency",
    "tight_closure_witness_check",
    "vassilev_containment",
    "verify_witness",
]
