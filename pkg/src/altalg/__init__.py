"""Exact computations in finite-dimensional nonassociative algebras."""
from .analysis import (
    CheckReport, SamplingPlan, SubspaceBasis, center, check_skew_symmetry, is_alternative,
    is_associative, nucleus, verify_identities,
)
from .constructions import (
    InvolutiveAlgebra, NormForm, base_field_algebra, cayley_dickson, cayley_dickson_chain,
    matrix_algebra_2x2, norm_form, norm_of, octonions, quaternions, sedenions, zorn_split_octonions,
)
from .core import AlgebraElement, StructureConstants, associator, commutator, direct_sum, multiply
from .fileformat import load_algebra, save_algebra
from .linalg import Matrix, nullspace, rank, solve
from .scalars import GF, Q, FieldSpec, Scalar, scalar_add, scalar_inv, scalar_mul, scalar_neg
from .zerodiv import (
    check_consequences, check_main_theorem, hypothesis_check, mult_operator, zero_divisor_census,
    zero_divisor_check,
)

__version__ = "0.1.0"
