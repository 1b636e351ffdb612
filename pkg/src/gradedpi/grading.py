"""The cyclic grading of M_n(K) by Z_n and constrained unit-tuple streams.

E(i, j) is homogeneous of degree (j - i) mod n, so the degree-0 component
is the diagonal and each of the n components is spanned by exactly n matrix
units.  Degrees are plain canonical residues in [0, n).

Tuple streams enumerate m-tuples of matrix units filtered by the residue
class of their degree sum, in lexicographic order on the flattened index
sequence (i_1, j_1, ..., i_m, j_m).  The order is fixed globally so that
witnesses are deterministic; streams are lazy and sliceable into contiguous
chunks for parallel workers.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator, NamedTuple

from .errors import ShapeMismatch
from .matrices import Matrix, MatrixUnit

__all__ = [
    "GradingSpec",
    "TupleConstraint",
    "TupleCounts",
    "UnitTuple",
    "tuple_stream",
    "tuple_stream_chunk",
    "tuple_counts",
    "chunk_prefix_ranges",
    "per_prefix_count",
    "format_unit_tuple",
]

UnitTuple = tuple  # of MatrixUnit


class TupleConstraint(enum.Enum):
    ALL = "all"
    SUM_ZERO = "sum-zero"
    SUM_NONZERO = "sum-nonzero"


class TupleCounts(NamedTuple):
    total: int
    sum_zero: int
    sum_nonzero: int


@functools.lru_cache(maxsize=None)
def _units(n: int) -> tuple:
    """All n^2 units of M_n in rank order (row-major on (i, j))."""
    return tuple(
        MatrixUnit(i, j, n) for i in range(1, n + 1) for j in range(1, n + 1)
    )


@functools.lru_cache(maxsize=None)
def _units_by_degree(n: int) -> tuple:
    by_deg = [[] for _ in range(n)]
    for u in _units(n):
        by_deg[(u.col - u.row) % n].append(u)
    return tuple(tuple(us) for us in by_deg)


@functools.lru_cache(maxsize=None)
def _units_avoiding_degree(n: int) -> tuple:
    """Index g -> all units whose degree is not g, in rank order."""
    return tuple(
        tuple(u for u in _units(n) if (u.col - u.row) % n != g) for g in range(n)
    )


@dataclass(frozen=True)
class GradingSpec:
    """The Z_n-grading of M_n by diagonals."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"matrix size must be positive, got {self.n}")

    def degree(self, u: MatrixUnit) -> int:
        """(col - row) mod n: the diagonal on which the unit sits."""
        if u.size != self.n:
            raise ShapeMismatch(f"unit of size {u.size} in grading of size {self.n}")
        return (u.col - u.row) % self.n

    def component(self, a: Matrix, g: int) -> Matrix:
        """The degree-g homogeneous part of a; the n parts sum to a."""
        if a.n != self.n:
            raise ShapeMismatch(f"matrix of size {a.n} in grading of size {self.n}")
        g = g % self.n
        z = a.field.zero
        rows = []
        for i in range(1, self.n + 1):
            rows.append(
                [a[i, j] if (j - i) % self.n == g else z for j in range(1, self.n + 1)]
            )
        return Matrix(a.field, rows)

    def units(self) -> tuple:
        return _units(self.n)

    def units_of_degree(self, g: int) -> tuple:
        return _units_by_degree(self.n)[g % self.n]

    def tuple_degree_sum(self, units: UnitTuple) -> int:
        return sum(self.degree(u) for u in units) % self.n


def per_prefix_count(spec: GradingSpec, constraint: TupleConstraint) -> int:
    """Stream elements contributed by each (m-1)-prefix: the number of
    admissible last units, which is independent of the prefix."""
    n = spec.n
    if constraint is TupleConstraint.ALL:
        return n * n
    if constraint is TupleConstraint.SUM_ZERO:
        return n
    return n * n - n


def tuple_counts(m: int, spec: GradingSpec) -> TupleCounts:
    """Closed-form stream lengths: n^(2m) tuples in total, of which exactly
    n^(2m-1) have degree sum zero (each residue class of units has size n,
    so degree sums distribute uniformly)."""
    if m < 1:
        raise ValueError(f"arity must be positive, got {m}")
    n = spec.n
    total = n ** (2 * m)
    sum_zero = n ** (2 * m - 1)
    return TupleCounts(total, sum_zero, total - sum_zero)


def _last_position_choices(spec, constraint):
    n = spec.n
    if constraint is TupleConstraint.ALL:
        all_units = _units(n)
        return lambda s: all_units
    if constraint is TupleConstraint.SUM_ZERO:
        by_deg = _units_by_degree(n)
        return lambda s: by_deg[(-s) % n]
    avoiding = _units_avoiding_degree(n)
    return lambda s: avoiding[(-s) % n]


def _stream(m, spec, constraint, prefix_lo, prefix_hi) -> Iterator[UnitTuple]:
    n = spec.n
    choices = _last_position_choices(spec, constraint)
    prefixes = product(_units(n), repeat=m - 1)
    if prefix_lo != 0 or prefix_hi is not None:
        prefixes = islice(prefixes, prefix_lo, prefix_hi)
    for prefix in prefixes:
        s = sum((u.col - u.row) for u in prefix) % n
        for u in choices(s):
            yield prefix + (u,)


def tuple_stream(
    m: int, spec: GradingSpec, constraint: TupleConstraint = TupleConstraint.ALL
) -> Iterator[UnitTuple]:
    """All m-tuples of units of M_n whose degree sum satisfies the
    constraint, lazily, in global lexicographic order."""
    if m < 1:
        raise ValueError(f"arity must be positive, got {m}")
    return _stream(m, spec, constraint, 0, None)


def chunk_prefix_ranges(m: int, spec: GradingSpec, workers: int) -> list:
    """Split the (m-1)-prefix space into ``workers`` contiguous ranges.

    Every prefix contributes the same number of stream elements under any
    constraint, so contiguous prefix ranges are contiguous stream ranges of
    near-equal size.
    """
    if workers < 1:
        raise ValueError(f"workers must be positive, got {workers}")
    prefixes = spec.n ** (2 * (m - 1))
    bounds = [prefixes * w // workers for w in range(workers + 1)]
    return [(bounds[w], bounds[w + 1]) for w in range(workers)]


def tuple_stream_chunk(
    m: int,
    spec: GradingSpec,
    constraint: TupleConstraint,
    worker: int,
    workers: int,
) -> Iterator[UnitTuple]:
    """The ``worker``-th of ``workers`` contiguous slices of the stream.

    Concatenating the chunks for worker = 0..workers-1 reproduces
    tuple_stream element for element.
    """
    lo, hi = chunk_prefix_ranges(m, spec, workers)[worker]
    return _stream(m, spec, constraint, lo, hi)


def format_unit_tuple(units: UnitTuple) -> str:
    """Witness text form: "E(i1,j1) E(i2,j2) ..."."""
    return " ".join(str(u) for u in units)
