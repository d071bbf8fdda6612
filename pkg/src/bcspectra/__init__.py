"""Spectral theory over the bicomplex numbers: scalars, matrices, joint spectra."""

from .core import (
    E1,
    E2,
    I,
    J,
    K,
    ONE,
    ZERO,
    BiComplex,
    Conjugation,
    Hyperbolic,
    IdempotentPair,
    Order,
    conjugate,
    d_plus_compare,
    euclid_norm,
    from_idempotent,
    hyper_norm,
    invert,
    to_idempotent,
)
from .errors import (
    BadExponentError,
    BicomplexError,
    DimensionMismatchError,
    NotCommutingError,
    NotSquareError,
    ParseError,
    ZeroDivisorError,
    ZeroInputError,
)
from .linalg import (
    BCMatrix,
    BCVector,
    adjoint,
    bc_inner,
    is_commuting_tuple,
    is_invertible,
    is_unitary,
    join,
    matmul,
    matvec,
    split,
    vector_norm,
)
from .pair import (
    block_matrix,
    in_approximate_point_spectrum,
    in_joint_spectrum,
    pair_point_spectrum,
    pair_residual_spectrum,
)
from .spectra import (
    JointEigenpair,
    RestrictedSpectrum,
    SpectrumSet,
    bc_joint_point_spectrum,
    check_radius_bound,
    complex_joint_point_spectrum,
    geometric_spectral_radius,
    operator_tuple_norm,
    restricted_spectrum,
    simultaneous_triangularize,
    tuple_norm,
)

__version__ = "0.1.0"

__all__ = [
    "BCMatrix",
    "BCVector",
    "BadExponentError",
    "BiComplex",
    "BicomplexError",
    "Conjugation",
    "DimensionMismatchError",
    "E1",
    "E2",
    "Hyperbolic",
    "I",
    "IdempotentPair",
    "J",
    "JointEigenpair",
    "K",
    "NotCommutingError",
    "NotSquareError",
    "ONE",
    "Order",
    "ParseError",
    "RestrictedSpectrum",
    "SpectrumSet",
    "ZERO",
    "ZeroDivisorError",
    "ZeroInputError",
    "adjoint",
    "bc_inner",
    "bc_joint_point_spectrum",
    "block_matrix",
    "check_radius_bound",
    "complex_joint_point_spectrum",
    "conjugate",
    "d_plus_compare",
    "euclid_norm",
    "from_idempotent",
    "geometric_spectral_radius",
    "hyper_norm",
    "in_approximate_point_spectrum",
    "in_joint_spectrum",
    "invert",
    "is_commuting_tuple",
    "is_invertible",
    "is_unitary",
    "join",
    "matmul",
    "matvec",
    "operator_tuple_norm",
    "pair_point_spectrum",
    "pair_residual_spectrum",
    "restricted_spectrum",
    "simultaneous_triangularize",
    "split",
    "to_idempotent",
    "tuple_norm",
    "vector_norm",
]
