"""Exact-arithmetic toolkit for derivations and biderivations.

Given a finite-dimensional algebra by structure constants, the package
computes derivation and biderivation spaces over the rationals, implements
the Lie brackets on right/left biderivations in a polynomial representation
closed under them, and machine-verifies the associated identities.
"""

from .algebras import (Algebra, BUILTIN_NAMES, KindReport, TripleWitness, bracket,
                       builtin, check_kind, identity_residual, opposite)
from .bilinear import (BilinearTensor, half_decomposition, skew_symmetrize, symmetrize)
from .biderivations import (bider_space, is_bider, is_left_bider, is_right_bider,
                            left_bider_bilinear_space, left_bider_witness,
                            right_bider_bilinear_space, right_bider_witness)
from .brackets import (PolyLeftMap, PolyRightMap, basis_evaluation_tensor,
                       counterexample_bracket, from_tensor, from_tensor_left,
                       is_left_bider_poly, is_right_bider_poly, lhd, rhd, to_tensor,
                       to_tensor_left, verify_lie_algebra, verify_transpose_interplay)
from .derivations import (ad, commutator, derivation_matrices, derivation_space,
                          is_derivation)
from .formats import FormatError, parse_algebra, parse_map, serialize_algebra, serialize_map
from .linalg import (Matrix, SubspaceBasis, canonicalize, intersect, nullspace, rref,
                     vector)
from .scalar_maps import (ExpCurveReport, ScalarPoly, ScalarTimesDerivation,
                          class_bracket, decompose_by_basis, exp_curve_check,
                          exp_nilpotent_exact, iff_derivation_check, to_poly_right)
from .verify import run_all

__version__ = "0.1.0"

__all__ = [
    "Algebra", "BUILTIN_NAMES", "KindReport", "TripleWitness", "bracket", "builtin",
    "check_kind", "identity_residual", "opposite",
    "BilinearTensor", "half_decomposition", "skew_symmetrize", "symmetrize",
    "bider_space", "is_bider", "is_left_bider", "is_right_bider",
    "left_bider_bilinear_space", "left_bider_witness", "right_bider_bilinear_space",
    "right_bider_witness",
    "PolyLeftMap", "PolyRightMap", "basis_evaluation_tensor", "counterexample_bracket",
    "from_tensor", "from_tensor_left", "is_left_bider_poly", "is_right_bider_poly",
    "lhd", "rhd", "to_tensor", "to_tensor_left", "verify_lie_algebra",
    "verify_transpose_interplay",
    "ad", "commutator", "derivation_matrices", "derivation_space", "is_derivation",
    "FormatError", "parse_algebra", "parse_map", "serialize_algebra", "serialize_map",
    "Matrix", "SubspaceBasis", "canonicalize", "intersect", "nullspace", "rref", "vector",
    "ExpCurveReport", "ScalarPoly", "ScalarTimesDerivation", "class_bracket",
    "decompose_by_basis", "exp_curve_check", "exp_nilpotent_exact",
    "iff_derivation_check", "to_poly_right",
    "run_all",
    "__version__",
]
