"""Shared fixtures and independent mini-oracles.

The oracle helpers below deliberately avoid the package's Matrix/Scalar
types: they work on plain tuples of Python ints (or Fractions), so
differential tests check the package against genuinely separate code.
"""

from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import settings

from gradedpi import FieldSpec

settings.register_profile("suite", max_examples=60, derandomize=True)
settings.load_profile("suite")


@pytest.fixture(scope="session")
def Q():
    return FieldSpec.rationals()


@pytest.fixture(scope="session")
def F5():
    return FieldSpec.prime(5)


# -- plain-int matrix oracle -------------------------------------------------


def int_unit(i, j, n):
    """E(i, j) as a tuple-of-tuples of ints, 1-based."""
    return tuple(
        tuple(1 if (r == i and c == j) else 0 for c in range(1, n + 1))
        for r in range(1, n + 1)
    )


def int_zero(n):
    return tuple(tuple(0 for _ in range(n)) for _ in range(n))


def int_matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n))
        for r in range(n)
    )


def int_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def int_scale(c, a):
    return tuple(tuple(c * x for x in row) for row in a)


def int_trace(a):
    return sum(a[i][i] for i in range(len(a)))


def int_eval(coeffs, mats):
    """Evaluate {permutation image: int coefficient} at int matrices."""
    n = len(mats[0])
    acc = int_zero(n)
    for perm, c in coeffs.items():
        prod = mats[perm[0] - 1]
        for k in perm[1:]:
            prod = int_matmul(prod, mats[k - 1])
        acc = int_add(acc, int_scale(c, prod))
    return acc


def int_mod(a, p):
    return tuple(tuple(x % p for x in row) for row in a)


def standard_coeffs(m):
    """Integer coefficients of the alternating sum over S_m."""
    out = {}
    for perm in permutations(range(1, m + 1)):
        sign = 1
        for a in range(m):
            for b in range(a + 1, m):
                if perm[a] > perm[b]:
                    sign = -sign
        out[perm] = sign
    return out


def fraction_rank(vectors):
    """Rank of a list of int/Fraction coordinate vectors, by independent
    Gaussian elimination over Fraction."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [x * inv for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank
