"""Exact centralizer algebras and their Frobenius systems.

Computes the commuting algebra S_n(c, F) of a square matrix over Q or
GF(p), classifies the extension S_n(c, F)/F as Frobenius or separable
Frobenius through the invariant factors of xI - c, and constructs
explicit verified Frobenius systems as witnesses.
"""

from .canon import (
    InvariantFactors,
    JordanSpec,
    build_jordan_matrix,
    invariant_factors,
    jordan_structure,
    jordan_transform,
)
from .centralizer import (
    SubalgebraBasis,
    centralizer_basis,
    hom_space_basis,
    membership,
    structured_centralizer_basis,
)
from .decide import BatchFailure, DecisionReport, decide, decide_batch
from .fields import FieldSpec, Scalar, gf, rationals
from .frobsys import (
    EqualSizeViolation,
    FrobeniusSystem,
    LinearMapMat,
    SearchSpace,
    VerificationReport,
    build_centralizer_system,
    compose_systems,
    conjugate_system,
    direct_sum_systems,
    frobenius_algebra_oracle,
    full_matrix_system,
    jordan_block_system,
    separability_element,
    separability_probe,
    verify_system,
)
from .matrices import (
    Mat,
    direct_sum,
    jordan_block,
    kron,
    matrix_unit,
    shift_matrix,
)
from .polys import Poly, derivative, poly_divrem, poly_gcd, rational_roots

__version__ = "0.1.0"

__all__ = [
    "BatchFailure",
    "DecisionReport",
    "EqualSizeViolation",
    "FieldSpec",
    "FrobeniusSystem",
    "InvariantFactors",
    "JordanSpec",
    "LinearMapMat",
    "Mat",
    "Poly",
    "Scalar",
    "SearchSpace",
    "SubalgebraBasis",
    "VerificationReport",
    "build_centralizer_system",
    "build_jordan_matrix",
    "centralizer_basis",
    "compose_systems",
    "conjugate_system",
    "decide",
    "decide_batch",
    "derivative",
    "direct_sum",
    "direct_sum_systems",
    "frobenius_algebra_oracle",
    "full_matrix_system",
    "gf",
    "hom_space_basis",
    "invariant_factors",
    "jordan_block",
    "jordan_block_system",
    "jordan_structure",
    "jordan_transform",
    "kron",
    "matrix_unit",
    "membership",
    "poly_divrem",
    "poly_gcd",
    "rational_roots",
    "rationals",
    "separability_element",
    "separability_probe",
    "shift_matrix",
    "structured_centralizer_basis",
    "verify_system",
]
