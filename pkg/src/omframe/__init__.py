"""Degree-optimal algebraic moving frames over exact coefficient fields.

Given a nonzero row vector of univariate polynomials, one partial
row-echelon reduction of a Sylvester-type coefficient matrix yields an
invertible polynomial matrix P with a*P = [gcd(a), 0, ..., 0] whose first
column is a minimal-degree Bezout vector and whose remaining columns form a
degree-ordered mu-basis of the syzygy module.
"""

from .equivariant import CoefficientSection, coefficient_section, equivariant_moving_frame
from .fields import GF, QQ, FieldError, field_by_name
from .frame import (
    MovingFrame,
    VerificationReport,
    bezout_from_profile,
    mu_basis_from_profile,
    optimal_moving_frame,
    verify_frame,
)
from .parser import ParseError, parse_poly, parse_vector
from .poly import (
    NEG_INF,
    Poly,
    PolyError,
    PolyMatrix,
    PolyVec,
    flat,
    format_poly,
    poly_ext_gcd,
    poly_gcd,
    row_times_matrix,
    sharp,
    vec_gcd,
)
from .reference import (
    WitnessSpec,
    brute_min_bezout,
    brute_mu_type,
    euclidean_frame,
    gen_witness,
    monomial_representation,
    principal_block_nonsingular,
    random_poly_vec,
)
from .sylvester import PivotProfile, SylvesterSystem, build_system, partial_rref

__version__ = "0.1.0"

__all__ = [
    "GF",
    "QQ",
    "CoefficientSection",
    "FieldError",
    "MovingFrame",
    "NEG_INF",
    "ParseError",
    "PivotProfile",
    "Poly",
    "PolyError",
    "PolyMatrix",
    "PolyVec",
    "SylvesterSystem",
    "VerificationReport",
    "WitnessSpec",
    "bezout_from_profile",
    "brute_min_bezout",
    "brute_mu_type",
    "build_system",
    "coefficient_section",
    "equivariant_moving_frame",
    "euclidean_frame",
    "field_by_name",
    "flat",
    "format_poly",
    "gen_witness",
    "monomial_representation",
    "mu_basis_from_profile",
    "optimal_moving_frame",
    "parse_poly",
    "parse_vector",
    "partial_rref",
    "poly_ext_gcd",
    "poly_gcd",
    "principal_block_nonsingular",
    "random_poly_vec",
    "row_times_matrix",
    "sharp",
    "vec_gcd",
    "verify_frame",
]
