"""Dense exact n x n matrices, matrix units, and canonical span accumulation.

Indices are 1-based throughout: E(i, j) is the matrix with a single 1 in
entry (i, j).  Row reduction keeps every span basis in reduced row-echelon
form, so accumulated bases are canonical regardless of insertion order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    FieldMismatch,
    PreconditionViolated,
    ShapeMismatch,
    SingularMatrix,
)
from .scalars import FieldSpec, Scalar

__all__ = [
    "MatrixUnit",
    "Matrix",
    "SpanBasis",
    "unit_product",
    "hollow_corner_witness",
]


@dataclass(frozen=True)
class MatrixUnit:
    """The basis matrix E(row, col) inside M_n."""

    row: int
    col: int
    size: int

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise ValueError(f"size must be positive, got {n}")
        if not (1 <= self.row <= n and 1 <= self.col <= n):
            raise ValueError(f"unit E({self.row},{self.col}) out of range for n={n}")

    def dense(self, field: FieldSpec) -> "Matrix":
        return Matrix.from_entries(self.size, field, {(self.row, self.col): field.one})

    def __str__(self):
        return f"E({self.row},{self.col})"


def unit_product(units: Sequence[MatrixUnit]) -> Optional[MatrixUnit]:
    """Chain-multiply matrix units in O(length).

    E(i,j) * E(k,l) is E(i,l) when j = k and zero otherwise, so a chain
    collapses to a single unit exactly when adjacent indices match.  Returns
    None for the zero product.
    """
    if not units:
        raise ValueError("empty unit chain")
    n = units[0].size
    for u in units[1:]:
        if u.size != n:
            raise ShapeMismatch(f"mixed unit sizes {n} and {u.size}")
    row = units[0].row
    col = units[0].col
    for u in units[1:]:
        if u.row != col:
            return None
        col = u.col
    return MatrixUnit(row, col, n)


class Matrix:
    """Immutable dense matrix with exact entries over a fixed field."""

    __slots__ = ("field", "n", "rows")

    def __init__(self, field: FieldSpec, rows: Sequence[Sequence[Scalar]]):
        n = len(rows)
        if n < 1 or any(len(r) != n for r in rows):
            raise ShapeMismatch("matrix must be square and nonempty")
        self.field = field
        self.n = n
        self.rows = tuple(tuple(r) for r in rows)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        z, o = field.zero, field.one
        return cls(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    @classmethod
    def from_entries(cls, n: int, field: FieldSpec, entries: dict) -> "Matrix":
        """Build from a sparse {(i, j): Scalar} dict with 1-based keys."""
        z = field.zero
        rows = [[z] * n for _ in range(n)]
        for (i, j), v in entries.items():
            rows[i - 1][j - 1] = v
        return cls(field, rows)

    @classmethod
    def from_int_rows(cls, rows: Sequence[Sequence[int]], field: FieldSpec) -> "Matrix":
        return cls(field, [[field.from_int(v) for v in r] for r in rows])

    # -- access ------------------------------------------------------------

    def __getitem__(self, key: tuple) -> Scalar:
        i, j = key
        return self.rows[i - 1][j - 1]

    def flatten(self) -> tuple:
        """Row-major length-n^2 coordinate vector."""
        return tuple(v for row in self.rows for v in row)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def is_hollow(self) -> bool:
        return not any(self.rows[i][i] for i in range(self.n))

    # -- arithmetic --------------------------------------------------------

    def _check_compatible(self, other: "Matrix"):
        if self.n != other.n or self.field != other.field:
            raise ShapeMismatch(
                f"incompatible matrices: {self.n}x{self.n} over {self.field}"
                f" vs {other.n}x{other.n} over {other.field}"
            )

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        return Matrix(
            self.field,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        return Matrix(
            self.field,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self._scaled(other)
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_compatible(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out.append([_dot(row, col, self.field) for col in cols])
        return Matrix(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self._scaled(other)
        return NotImplemented

    def _scaled(self, c) -> "Matrix":
        if isinstance(c, int):
            c = self.field.from_int(c)
        return Matrix(self.field, [[c * a for a in row] for row in self.rows])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def trace(self) -> Scalar:
        t = self.field.zero
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    # -- exact elimination -------------------------------------------------

    def determinant(self) -> Scalar:
        n = self.n
        work = [list(row) for row in self.rows]
        det = self.field.one
        for c in range(n):
            piv = next((r for r in range(c, n) if work[r][c]), None)
            if piv is None:
                return self.field.zero
            if piv != c:
                work[c], work[piv] = work[piv], work[c]
                det = -det
            det = det * work[c][c]
            inv = work[c][c].inverse()
            for r in range(c + 1, n):
                if work[r][c]:
                    factor = work[r][c] * inv
                    work[r] = [a - factor * b for a, b in zip(work[r], work[c])]
        return det

    def inverse(self) -> "Matrix":
        n = self.n
        z, o = self.field.zero, self.field.one
        work = [list(row) + [o if i == j else z for j in range(n)]
                for i, row in enumerate(self.rows)]
        for c in range(n):
            piv = next((r for r in range(c, n) if work[r][c]), None)
            if piv is None:
                raise SingularMatrix("matrix is not invertible")
            work[c], work[piv] = work[piv], work[c]
            inv = work[c][c].inverse()
            work[c] = [a * inv for a in work[c]]
            for r in range(n):
                if r != c and work[r][c]:
                    factor = work[r][c]
                    work[r] = [a - factor * b for a, b in zip(work[r], work[c])]
        return Matrix(self.field, [row[n:] for row in work])

    # -- text form ---------------------------------------------------------

    def to_text(self) -> str:
        """Report form: rows joined by ";", entries by ","."""
        return ";".join(",".join(str(v) for v in row) for row in self.rows)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Matrix({self.field}, {self.to_text()!r})"


def _dot(row, col, field) -> Scalar:
    acc = field.zero
    for a, b in zip(row, col):
        if a and b:
            acc = acc + a * b
    return acc


def hollow_corner_witness(a: Matrix) -> Matrix:
    """Invertible P such that (P a P^-1) has nonzero (1,1) entry, for any
    nonzero matrix a with all-zero diagonal and n >= 2.

    Construction: pick (i, j), i != j, with a[i, j] != 0; conjugate by the
    permutation sending i -> 1, j -> 2, which moves the entry to (1, 2)
    while keeping the diagonal zero; then conjugate by I + E(2,1), which
    puts -a[i, j] in the corner.
    """
    n = a.n
    if n < 2:
        raise PreconditionViolated("corner witness needs n >= 2")
    if not a.is_hollow():
        raise PreconditionViolated("matrix has a nonzero diagonal entry")
    target = None
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and a[i, j]:
                target = (i, j)
                break
        if target:
            break
    if target is None:
        raise PreconditionViolated("zero matrix has no corner witness")
    i, j = target
    image = {i: 1, j: 2}
    nxt = 3
    for k in range(1, n + 1):
        if k not in image:
            image[k] = nxt
            nxt += 1
    perm = Matrix.from_entries(
        n, a.field, {(image[k], k): a.field.one for k in range(1, n + 1)}
    )
    shear = Matrix.from_entries(
        n, a.field,
        {(k, k): a.field.one for k in range(1, n + 1)} | {(2, 1): a.field.one},
    )
    return shear * perm


class SpanBasis:
    """Accumulates the span of flattened n x n matrices by exact row
    reduction, keeping the pivot rows in reduced row-echelon form.

    The basis is canonical: any insertion order of the same vectors (or a
    merge of partial bases) produces identical rows.
    """

    def __init__(self, n: int, field: FieldSpec):
        self.n = n
        self.field = field
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @property
    def ambient_dimension(self) -> int:
        return self.n * self.n

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def _check(self, v: Matrix):
        if v.field != self.field:
            raise FieldMismatch(f"vector over {v.field}, basis over {self.field}")
        if v.n != self.n:
            raise ShapeMismatch(f"matrix size {v.n}, basis ambient size {self.n}")

    def _reduce(self, vec: list[Scalar]) -> list[Scalar]:
        for piv, row in zip(self.pivots, self.rows):
            c = vec[piv]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def insert(self, v: Matrix) -> bool:
        """Add v to the span; returns True if the dimension grew."""
        self._check(v)
        return self.insert_vector(list(v.flatten()))

    def insert_vector(self, vec: list[Scalar]) -> bool:
        vec = self._reduce(vec)
        piv = next((k for k, a in enumerate(vec) if a), None)
        if piv is None:
            return False
        inv = vec[piv].inverse()
        vec = [a * inv for a in vec]
        for k, row in enumerate(self.rows):
            c = row[piv]
            if c:
                self.rows[k] = [a - c * b for a, b in zip(row, vec)]
        at = next((k for k, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(at, vec)
        self.pivots.insert(at, piv)
        return True

    def contains(self, v: Matrix) -> bool:
        """True iff v reduces to zero against the pivot rows."""
        self._check(v)
        return not any(self._reduce(list(v.flatten())))

    def merge(self, other: "SpanBasis") -> "SpanBasis":
        """Union of spans; associative, and equal to inserting the other
        basis's raw vectors one by one."""
        if other.field != self.field or other.n != self.n:
            raise FieldMismatch("cannot merge bases over different ambients")
        for row in other.rows:
            self.insert_vector(list(row))
        return self

    def basis_matrices(self) -> list[Matrix]:
        n = self.n
        out = []
        for row in self.rows:
            out.append(Matrix(self.field, [row[r * n:(r + 1) * n] for r in range(n)]))
        return out

    def __eq__(self, other):
        if not isinstance(other, SpanBasis):
            return NotImplemented
        return (
            self.field == other.field
            and self.n == other.n
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"SpanBasis(n={self.n}, dim={self.dimension})"
