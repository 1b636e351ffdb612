"""Decision procedures over graded unit tuples.

Three statements about a multilinear polynomial f on M_n(K), each decided
by a finite scan of matrix-unit tuples filtered by degree-sum class:

    S0  f vanishes on every tuple with degree sum 0
    S1  f vanishes on every tuple with degree sum != 0
    S2  the trace of f vanishes on every tuple with degree sum 0

S0 holds iff f is a polynomial identity; S1 holds iff the image lies in
the scalars; S2 holds iff the image lies in the trace-zero matrices.  When
the field characteristic does not divide n, the (S1, S2) pair classifies
the linear span of the image four ways:

    S1 and S2      identity         span {0}        dimension 0
    S1, not S2     central          span = scalars  dimension 1
    not S1, S2     trace-zero span  span = sl_n     dimension n^2 - 1
    neither        full span        span = M_n      dimension n^2

Every check reports the lexicographically first violating tuple (in the
global stream order), so witnesses are reproducible for any worker count.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .errors import (
    FieldMismatch,
    UnsupportedCharacteristic,
    UnsupportedSize,
)
from .evaluate import evaluate_units
from .grading import (
    GradingSpec,
    TupleConstraint,
    UnitTuple,
    chunk_prefix_ranges,
    per_prefix_count,
    tuple_counts,
    _stream,
)
from .matrices import Matrix, SpanBasis
from .polynomial import MultilinearPoly
from .scalars import FieldSpec

__all__ = [
    "Statement",
    "Verdict",
    "CheckReport",
    "Classification",
    "check_statement",
    "is_identity",
    "is_central",
    "image_in_sl",
    "span_oracle",
    "classify",
    "naive_identity_check",
    "mesyan_applicable",
]


class Statement(enum.Enum):
    S0 = "S0"
    S1 = "S1"
    S2 = "S2"


class Verdict(enum.Enum):
    IDENTITY = "identity"
    CENTRAL = "central"
    TRACE_ZERO_SPAN = "trace-zero-span"
    FULL_SPAN = "full-span"


_CONSTRAINT = {
    Statement.S0: TupleConstraint.SUM_ZERO,
    Statement.S1: TupleConstraint.SUM_NONZERO,
    Statement.S2: TupleConstraint.SUM_ZERO,
}

_EXPECTED_DIMENSION = {
    Verdict.IDENTITY: lambda n: 0,
    Verdict.CENTRAL: lambda n: 1,
    Verdict.TRACE_ZERO_SPAN: lambda n: n * n - 1,
    Verdict.FULL_SPAN: lambda n: n * n,
}


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one statement check.

    When the statement fails, ``witness`` is the first violating tuple in
    stream order together with its evaluation, and ``tuples_examined`` is
    the 1-based stream position of that witness; otherwise it is the full
    constrained stream length.  Both are independent of the worker count.
    """

    statement: Statement
    holds: bool
    witness: Optional[tuple]  # (UnitTuple, Matrix)
    tuples_examined: int
    n: int


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    s1_holds: bool
    s2_holds: bool
    span: SpanBasis
    span_dimension: int
    s1_report: CheckReport
    s2_report: CheckReport


def _check_field(f: MultilinearPoly, field: Optional[FieldSpec]) -> FieldSpec:
    if field is not None and field != f.field:
        raise FieldMismatch(f"polynomial over {f.field}, check requested over {field}")
    return f.field


def _violates(statement: Statement, value: Matrix) -> bool:
    if statement is Statement.S2:
        return bool(value.trace())
    return not value.is_zero()


def _scan_chunk(payload) -> Optional[tuple]:
    """Scan one contiguous chunk; returns (global_index, tuple, value) of
    the first in-chunk violation, or None."""
    f, n, statement, lo, hi = payload
    spec = GradingSpec(n)
    constraint = _CONSTRAINT[statement]
    base = lo * per_prefix_count(spec, constraint)
    for offset, units in enumerate(_stream(f.arity, spec, constraint, lo, hi)):
        value = evaluate_units(f, units)
        if _violates(statement, value):
            return base + offset, units, value
    return None


def check_statement(
    f: MultilinearPoly,
    n: int,
    field: Optional[FieldSpec] = None,
    statement: Statement = Statement.S0,
    workers: int = 1,
) -> CheckReport:
    """Decide one statement by streaming the constrained unit tuples
    through the fast evaluator, stopping at the first violation."""
    if n < 1:
        raise ValueError(f"matrix size must be positive, got {n}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    _check_field(f, field)
    if isinstance(statement, str):
        statement = Statement(statement)
    if f.is_zero():
        return CheckReport(statement, True, None, 0, n)
    spec = GradingSpec(n)
    constraint = _CONSTRAINT[statement]
    hit = None
    if workers == 1:
        hit = _scan_chunk((f, n, statement, 0, None))
    else:
        ranges = chunk_prefix_ranges(f.arity, spec, workers)
        payloads = [(f, n, statement, lo, hi) for lo, hi in ranges]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_chunk, payloads))
        hits = [r for r in results if r is not None]
        if hits:
            hit = min(hits, key=lambda r: r[0])
    if hit is None:
        counts = tuple_counts(f.arity, spec)
        examined = (
            counts.sum_nonzero
            if constraint is TupleConstraint.SUM_NONZERO
            else counts.sum_zero
        )
        return CheckReport(statement, True, None, examined, n)
    index, units, value = hit
    return CheckReport(statement, False, (units, value), index + 1, n)


def is_identity(
    f: MultilinearPoly, n: int, field: Optional[FieldSpec] = None, workers: int = 1
) -> tuple:
    """f is a polynomial identity for M_n iff S0 holds."""
    report = check_statement(f, n, field, Statement.S0, workers)
    return report.holds, report


def is_central(
    f: MultilinearPoly, n: int, field: Optional[FieldSpec] = None, workers: int = 1
) -> tuple:
    """The image of f lies in the scalar matrices iff S1 holds.  (This
    includes identities; "central and not an identity" is the CENTRAL
    classification verdict.)"""
    report = check_statement(f, n, field, Statement.S1, workers)
    return report.holds, report


def image_in_sl(
    f: MultilinearPoly, n: int, field: Optional[FieldSpec] = None, workers: int = 1
) -> tuple:
    """The image of f lies in the trace-zero matrices iff S2 holds."""
    report = check_statement(f, n, field, Statement.S2, workers)
    return report.holds, report


def _span_chunk(payload) -> SpanBasis:
    f, n, lo, hi = payload
    spec = GradingSpec(n)
    basis = SpanBasis(n, f.field)
    full = n * n
    for units in _stream(f.arity, spec, TupleConstraint.ALL, lo, hi):
        basis.insert(evaluate_units(f, units))
        if basis.dimension == full:
            break
    return basis


def span_oracle(
    f: MultilinearPoly, n: int, field: Optional[FieldSpec] = None, workers: int = 1
) -> SpanBasis:
    """Canonical basis of the linear span of the image of f on M_n.

    Multilinearity makes every evaluation a combination of evaluations at
    matrix-unit tuples, so inserting all unit-tuple values (stopping early
    at full rank) spans exactly the image span.
    """
    if n < 1:
        raise ValueError(f"matrix size must be positive, got {n}")
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    _check_field(f, field)
    if f.is_zero():
        return SpanBasis(n, f.field)
    if workers == 1:
        return _span_chunk((f, n, 0, None))
    ranges = chunk_prefix_ranges(f.arity, GradingSpec(n), workers)
    payloads = [(f, n, lo, hi) for lo, hi in ranges]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_span_chunk, payloads))
    merged = SpanBasis(n, f.field)
    for basis in results:
        merged.merge(basis)
    return merged


def classify(
    f: MultilinearPoly, n: int, field: Optional[FieldSpec] = None, workers: int = 1
) -> Classification:
    """Four-way classification of the span of the image of f on M_n.

    Runs the S1 and S2 checks, maps the pair to a verdict, then computes
    the actual span and refuses to return unless its dimension matches the
    verdict (the two routes are independent, so this is a genuine
    cross-check, not a formality).
    """
    field = _check_field(f, field)
    if n < 2:
        raise UnsupportedSize(
            "classification needs n >= 2; M_1 is the commutative degenerate case"
        )
    p = field.characteristic()
    if p != 0 and n % p == 0:
        raise UnsupportedCharacteristic(
            f"characteristic {p} divides n = {n}: scalar and trace-zero matrices"
            " overlap, so the four-way classification breaks down"
        )
    if f.is_zero():
        empty = SpanBasis(n, field)
        report = CheckReport(Statement.S1, True, None, 0, n)
        report2 = CheckReport(Statement.S2, True, None, 0, n)
        return Classification(Verdict.IDENTITY, True, True, empty, 0, report, report2)
    s1 = check_statement(f, n, field, Statement.S1, workers)
    s2 = check_statement(f, n, field, Statement.S2, workers)
    if s1.holds and s2.holds:
        verdict = Verdict.IDENTITY
    elif s1.holds:
        verdict = Verdict.CENTRAL
    elif s2.holds:
        verdict = Verdict.TRACE_ZERO_SPAN
    else:
        verdict = Verdict.FULL_SPAN
    span = span_oracle(f, n, field, workers)
    expected = _EXPECTED_DIMENSION[verdict](n)
    if span.dimension != expected:
        raise AssertionError(
            f"internal inconsistency: verdict {verdict.value} expects span"
            f" dimension {expected}, but the span oracle found {span.dimension}"
        )
    return Classification(
        verdict, s1.holds, s2.holds, span, span.dimension, s1, s2
    )


def naive_identity_check(
    f: MultilinearPoly, n: int, field: Optional[FieldSpec] = None
) -> bool:
    """Classical oracle: f vanishes at all n^(2m) matrix-unit tuples, with
    no grading filter.  Kept deliberately dumb for differential testing."""
    if n < 1:
        raise ValueError(f"matrix size must be positive, got {n}")
    _check_field(f, field)
    spec = GradingSpec(n)
    for units in _stream(f.arity, spec, TupleConstraint.ALL, 0, None):
        if not evaluate_units(f, units).is_zero():
            return False
    return True


def mesyan_applicable(arity: int, n: int) -> bool:
    """Whether the arity is within the m <= 2n - 1 range where the image
    of a nonzero multilinear polynomial is conjectured to contain every
    trace-zero matrix."""
    return arity <= 2 * n - 1
