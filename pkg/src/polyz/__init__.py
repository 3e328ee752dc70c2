"""Exact linear algebra over multivariate polynomial rings with integer
coefficients: syzygy generating sets, ideal-membership and linear-system
certificates over Z[X1..XN], field and localized solvers, explicit degree
bounds, and a brute-force oracle for bounded-degree cross-checks.
"""

from ._kernels import BACKEND
from .bounds import BoundReport, audit, beta, e_level_bound, flat_bound, mono_count
from .domains import GF, QQ, ZZ, FpT, ZLoc, domain_for_tag
from .errors import (
    CombinatorialLimit,
    ExponentBlowup,
    InputError,
    InvariantViolation,
    MixedSystems,
    NonConstantLeading,
    NotCoprime,
    NotPrime,
    NoVariables,
    ParseError,
    PolyzError,
    ResourceLimit,
    SchemaError,
    SingularMinor,
    Zero,
    ZeroMatrix,
)
from .field_solver import (
    FieldSyzygyBasis,
    descend_finite_field,
    solve_inhomogeneous_field,
    structure_constants,
    syzygy_field,
)
from .global_solver import (
    Certificate,
    LocalCertificate,
    ZSyzygyBasis,
    bezout_local,
    bezout_z,
    denominator_delta,
    member_z,
    module_colon,
    module_intersect,
    module_saturate,
    power_cofactors,
    solve_linear_z,
    syzygy_z,
)
from .linalg import PolyMatrix
from .local_solver import LocalSyzygyBasis, combine_generators, syzygy_local
from .oracle import member_bounded_z, syzygy_bounded_z
from .poly import Height, Polynomial, height_q
from .text import format_polynomial, parse_polynomial

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundReport",
    "Certificate",
    "CombinatorialLimit",
    "ExponentBlowup",
    "FieldSyzygyBasis",
    "FpT",
    "GF",
    "Height",
    "InputError",
    "InvariantViolation",
    "LocalCertificate",
    "LocalSyzygyBasis",
    "MixedSystems",
    "NonConstantLeading",
    "NotCoprime",
    "NotPrime",
    "NoVariables",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "PolyzError",
    "QQ",
    "ResourceLimit",
    "SchemaError",
    "SingularMinor",
    "ZLoc",
    "ZSyzygyBasis",
    "Zero",
    "ZeroMatrix",
    "ZZ",
    "audit",
    "bezout_local",
    "bezout_z",
    "beta",
    "combine_generators",
    "denominator_delta",
    "descend_finite_field",
    "domain_for_tag",
    "e_level_bound",
    "flat_bound",
    "format_polynomial",
    "height_q",
    "member_bounded_z",
    "member_z",
    "module_colon",
    "module_intersect",
    "module_saturate",
    "mono_count",
    "parse_polynomial",
    "power_cofactors",
    "solve_inhomogeneous_field",
    "solve_linear_z",
    "structure_constants",
    "syzygy_bounded_z",
    "syzygy_field",
    "syzygy_local",
    "syzygy_z",
]
