"""Exact evaluation of multilinear polynomials on matrices.

Two routes: a general dense path (sum of permuted matrix products) and a
symbolic fast path for matrix-unit arguments, where each permutation's
product collapses by the delta rule in O(m) with no dense multiplication.
The fast path is what the decision procedures drive; the dense path serves
general-matrix callers and acts as its differential oracle.
"""

from __future__ import annotations

from typing import Sequence

from .errors import EvalMismatch
from .grading import UnitTuple
from .matrices import Matrix, MatrixUnit, unit_product
from .polynomial import MultilinearPoly

__all__ = ["evaluate", "evaluate_units"]


def evaluate(f: MultilinearPoly, args: Sequence[Matrix]) -> Matrix:
    """f(args) as an exact dense matrix."""
    if len(args) != f.arity:
        raise EvalMismatch(f"arity {f.arity} polynomial got {len(args)} arguments")
    n = args[0].n
    for a in args:
        if not isinstance(a, Matrix):
            raise EvalMismatch("dense evaluation takes Matrix arguments")
        if a.n != n or a.field != f.field:
            raise EvalMismatch(
                f"argument is {a.n}x{a.n} over {a.field}; "
                f"expected {n}x{n} over {f.field}"
            )
    acc = Matrix.zero(n, f.field)
    for perm, coeff in f.sorted_terms():
        prod = args[perm[0] - 1]
        for k in perm[1:]:
            prod = prod * args[k - 1]
        acc = acc + coeff * prod
    return acc


def evaluate_units(f: MultilinearPoly, units: UnitTuple) -> Matrix:
    """f at a tuple of matrix units, via delta-rule chain collapse.

    Each permutation contributes its coefficient to a single entry (or
    nothing), so the cost is O(m! * m) scalar operations.  Agrees with
    ``evaluate`` on the dense embeddings.
    """
    if len(units) != f.arity:
        raise EvalMismatch(f"arity {f.arity} polynomial got {len(units)} units")
    n = units[0].size
    for u in units:
        if not isinstance(u, MatrixUnit):
            raise EvalMismatch("unit evaluation takes MatrixUnit arguments")
        if u.size != n:
            raise EvalMismatch(f"mixed unit sizes {n} and {u.size}")
    entries: dict = {}
    for perm, coeff in f.sorted_terms():
        hit = unit_product([units[k - 1] for k in perm])
        if hit is None:
            continue
        key = (hit.row, hit.col)
        prior = entries.get(key)
        entries[key] = coeff if prior is None else prior + coeff
    return Matrix.from_entries(n, f.field, entries)
