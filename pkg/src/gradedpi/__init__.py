"""gradedpi: graded decision procedures for multilinear polynomials on M_n(K).

Decides whether a multilinear noncommutative polynomial is a polynomial
identity, a central polynomial, or trace-zero valued on the n x n matrices
over an exact field, and classifies the linear span of its image as {0},
the scalars, the trace-zero matrices, or all of M_n — with reproducible
witnesses and brute-force cross-validation oracles.
"""

from .decide import (
    CheckReport,
    Classification,
    Statement,
    Verdict,
    check_statement,
    classify,
    image_in_sl,
    is_central,
    is_identity,
    mesyan_applicable,
    naive_identity_check,
    span_oracle,
)
from .evaluate import evaluate, evaluate_units
from .grading import (
    GradingSpec,
    TupleConstraint,
    TupleCounts,
    format_unit_tuple,
    tuple_counts,
    tuple_stream,
    tuple_stream_chunk,
)
from .matrices import Matrix, MatrixUnit, SpanBasis, hollow_corner_witness, unit_product
from .polynomial import (
    MultilinearPoly,
    builtin,
    commutator,
    jordan_central,
    parse_poly,
    perm_sign,
    random_poly,
    single_variable,
    standard_polynomial,
    zero_poly,
)
from .scalars import RATIONALS, FieldKind, FieldSpec, Scalar

__version__ = "0.1.0"

__all__ = [
    "CheckReport",
    "Classification",
    "FieldKind",
    "FieldSpec",
    "GradingSpec",
    "Matrix",
    "MatrixUnit",
    "MultilinearPoly",
    "RATIONALS",
    "Scalar",
    "SpanBasis",
    "Statement",
    "TupleConstraint",
    "TupleCounts",
    "Verdict",
    "builtin",
    "check_statement",
    "classify",
    "commutator",
    "evaluate",
    "evaluate_units",
    "format_unit_tuple",
    "hollow_corner_witness",
    "image_in_sl",
    "is_central",
    "is_identity",
    "jordan_central",
    "mesyan_applicable",
    "naive_identity_check",
    "parse_poly",
    "perm_sign",
    "random_poly",
    "single_variable",
    "span_oracle",
    "standard_polynomial",
    "tuple_counts",
    "tuple_stream",
    "tuple_stream_chunk",
    "unit_product",
    "zero_poly",
]
