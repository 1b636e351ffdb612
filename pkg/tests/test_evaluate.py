import random
from itertools import product

import pytest

from gradedpi import (
    GradingSpec,
    Matrix,
    MatrixUnit,
    commutator,
    evaluate,
    evaluate_units,
    jordan_central,
    random_poly,
    standard_polynomial,
)
from gradedpi.errors import EvalMismatch

from conftest import int_eval, int_trace, int_unit, int_zero, standard_coeffs


def unit(i, j, n):
    return MatrixUnit(i, j, n)


class TestDensePath:
    def test_commutator_example(self, Q):
        got = evaluate(commutator(Q), [unit(1, 2, 2).dense(Q), unit(2, 1, 2).dense(Q)])
        want = unit(1, 1, 2).dense(Q) - unit(2, 2, 2).dense(Q)
        assert got == want

    def test_zero_argument_kills_value(self, Q):
        rng = random.Random(11)
        for seed in range(20):
            f = random_poly(3, Q, seed, 3)
            args = [
                Matrix.from_int_rows(
                    [[rng.randrange(-3, 4) for _ in range(2)] for _ in range(2)], Q
                )
                for _ in range(3)
            ]
            args[seed % 3] = Matrix.zero(2, Q)
            assert evaluate(f, args).is_zero()

    def test_alternating_on_equal_arguments(self, Q):
        ident = Matrix.identity(2, Q)
        assert evaluate(standard_polynomial(2, Q), [ident, ident]).is_zero()

    def test_mismatches(self, Q, F5):
        f = commutator(Q)
        with pytest.raises(EvalMismatch):
            evaluate(f, [Matrix.identity(2, Q)])
        with pytest.raises(EvalMismatch):
            evaluate(f, [Matrix.identity(2, Q), Matrix.identity(3, Q)])
        with pytest.raises(EvalMismatch):
            evaluate(f, [Matrix.identity(2, F5), Matrix.identity(2, F5)])


class TestUnitPath:
    def test_commutator_example(self, Q):
        got = evaluate_units(commutator(Q), (unit(1, 1, 2), unit(1, 2, 2)))
        assert got == unit(1, 2, 2).dense(Q)

    def test_amitsur_levitzki_all_256_tuples(self, Q):
        # independent oracle: evaluate the alternating 4-variable sum with
        # plain int matrices over every 4-tuple of M_2 units
        coeffs = standard_coeffs(4)
        for combo in product(range(1, 3), repeat=8):
            mats = [int_unit(combo[2 * k], combo[2 * k + 1], 2) for k in range(4)]
            assert int_eval(coeffs, mats) == int_zero(2)
        f = standard_polynomial(4, Q)
        spec = GradingSpec(2)
        for units in product(spec.units(), repeat=4):
            assert evaluate_units(f, units).is_zero()

    def test_jordan_central_double_identity(self, Q):
        # [E12,E21] = E11 - E22 squares to the identity, so the value is 2I
        units = (unit(1, 2, 2), unit(2, 1, 2), unit(1, 2, 2), unit(2, 1, 2))
        got = evaluate_units(jordan_central(Q), units)
        assert got == 2 * Matrix.identity(2, Q)
        # cross-check with the int oracle
        f = jordan_central(Q)
        coeffs = {perm: c.numerator for perm, c in f.terms.items()}
        mats = [int_unit(u.row, u.col, 2) for u in units]
        val = int_eval(coeffs, mats)
        assert val == ((2, 0), (0, 2))
        assert int_trace(val) == 4

    def test_arity_mismatch(self, Q):
        with pytest.raises(EvalMismatch):
            evaluate_units(commutator(Q), (unit(1, 1, 2),))
        with pytest.raises(EvalMismatch):
            evaluate_units(commutator(Q), (unit(1, 1, 2), unit(1, 1, 3)))


class TestFastEqualsDense:
    def test_10000_random_pairs(self, Q, F5):
        rng = random.Random(20240809)
        arities = [1, 1, 2, 2, 2, 3, 3, 3, 4, 5]
        for k in range(10_000):
            m = rng.choice(arities)
            n = rng.randrange(1, 4)
            field = F5 if k % 5 else Q
            nterms = rng.randrange(1, 7)
            f = _sparse_poly(rng, m, field, nterms)
            units = tuple(
                unit(rng.randrange(1, n + 1), rng.randrange(1, n + 1), n)
                for _ in range(m)
            )
            fast = evaluate_units(f, units)
            dense = evaluate(f, [u.dense(field) for u in units])
            assert fast == dense

    def test_multilinearity_in_each_slot(self, Q):
        rng = random.Random(300)
        for seed in range(40):
            m = rng.randrange(1, 4)
            f = random_poly(m, Q, seed, 3)
            slot = rng.randrange(m)
            n = 2
            args = [_rand_matrix(rng, n, Q) for _ in range(m)]
            b = _rand_matrix(rng, n, Q)
            c = _rand_matrix(rng, n, Q)
            lam = Q.parse(f"{rng.randrange(-5, 6)}/{rng.randrange(1, 4)}")
            with_sum = args[:]
            with_sum[slot] = b + c
            with_b = args[:]
            with_b[slot] = b
            with_c = args[:]
            with_c[slot] = c
            assert evaluate(f, with_sum) == evaluate(f, with_b) + evaluate(f, with_c)
            scaled = args[:]
            scaled[slot] = lam * b
            assert evaluate(f, scaled) == lam * evaluate(f, with_b)

    def test_homogeneity_of_unit_values(self, Q):
        # each unit-tuple value lies in the graded component of the degree sum
        rng = random.Random(45)
        for seed in range(400):
            m = rng.randrange(1, 5)
            n = rng.randrange(2, 4)
            f = random_poly(m, Q, seed, 2)
            spec = GradingSpec(n)
            units = tuple(
                unit(rng.randrange(1, n + 1), rng.randrange(1, n + 1), n)
                for _ in range(m)
            )
            g = spec.tuple_degree_sum(units)
            value = evaluate_units(f, units)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if (j - i) % n != g:
                        assert not value[i, j]

    def test_conjugation_equivariance(self, Q):
        rng = random.Random(777)
        checked = 0
        while checked < 60:
            n = rng.randrange(2, 4)
            p = _rand_matrix(rng, n, Q)
            if not p.determinant():
                continue
            checked += 1
            m = rng.randrange(1, 4)
            f = random_poly(m, Q, rng.randrange(10**6), 2)
            args = [_rand_matrix(rng, n, Q) for _ in range(m)]
            pinv = p.inverse()
            left = p * evaluate(f, args) * pinv
            conjugated = [p * a * pinv for a in args]
            assert left == evaluate(f, conjugated)


def _rand_matrix(rng, n, field):
    return Matrix.from_int_rows(
        [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)], field
    )


def _sparse_poly(rng, m, field, nterms):
    from itertools import permutations

    perms = list(permutations(range(1, m + 1)))
    terms = {}
    for _ in range(nterms):
        perm = perms[rng.randrange(len(perms))]
        terms[perm] = field.from_int(rng.randrange(-3, 4))
    from gradedpi import MultilinearPoly

    return MultilinearPoly(m, field, terms)
