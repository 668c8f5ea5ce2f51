"""Test ideals of non-principal ideals in prime characteristic.

The package computes generalized test ideals tau(R, a^lambda) over
R = F_p[x_1..x_n] by principalizing through the extended Rees algebra
T = R[a t, 1/t]: the certified Cartier fixed-point chain runs on a
presentation of T against the principal divisor (1/t), and graded
components come back as ideals of R.  Independent oracles (the Newton
polyhedron formula for monomial ideals; the direct stabilization chain)
cross-check every answer.
"""

from .cartier import (
    CartierGenerator,
    CertifiedTau,
    ChainOptions,
    TestElement,
    cartier_generator,
    grading_shift,
    tau_multi_level,
    tau_pair_quotient,
    test_element,
)
from .decomposition import (
    DecompositionReport,
    VerifyOptions,
    fjump_via_rees,
    rees_tau,
    verify_decomposition,
)
from .errors import ReestauError
from .exponents import RationalExponent
from .fields import PrimeField
from .frobenius import FrobeniusLevel, bracket_power, frobenius_root, nu_value
from .ideals import (
    GBLimits,
    Ideal,
    colon,
    eliminate,
    groebner_basis,
    ideal_equals,
    intersect,
    normal_form,
    saturate,
    set_default_limits,
)
from .kernels import kernel_name
from .orders import MonomialOrder
from .poly import Polynomial, PolyRing, parse_generators, parse_polynomial
from .rees import (
    PresentedGradedRing,
    ReesData,
    graded_component,
    homogenize_check,
    rees_data,
    rees_presentation,
)
from .tau import (
    Certificate,
    TauResult,
    f_jumping_numbers,
    tau_bms,
    tau_monomial,
    tau_principal,
)

__version__ = "0.1.0"

__all__ = [
    "CartierGenerator",
    "Certificate",
    "CertifiedTau",
    "ChainOptions",
    "DecompositionReport",
    "FrobeniusLevel",
    "GBLimits",
    "Ideal",
    "MonomialOrder",
    "Polynomial",
    "PolyRing",
    "PresentedGradedRing",
    "PrimeField",
    "RationalExponent",
    "ReesData",
    "ReestauError",
    "TauResult",
    "TestElement",
    "VerifyOptions",
    "bracket_power",
    "cartier_generator",
    "colon",
    "eliminate",
    "f_jumping_numbers",
    "fjump_via_rees",
    "frobenius_root",
    "graded_component",
    "grading_shift",
    "groebner_basis",
    "homogenize_check",
    "ideal_equals",
    "intersect",
    "kernel_name",
    "normal_form",
    "nu_value",
    "parse_generators",
    "parse_polynomial",
    "rees_data",
    "rees_presentation",
    "rees_tau",
    "saturate",
    "set_default_limits",
    "tau_bms",
    "tau_monomial",
    "tau_multi_level",
    "tau_pair_quotient",
    "tau_principal",
    "test_element",
    "verify_decomposition",
]
