from fractions import Fraction

import pytest

from ratdet.bareiss import bareiss_determinant, exact_rational_determinant
from ratdet.generators import (
    MatrixSource,
    approximate_entries,
    cf_approximant,
    gen_hilbert,
    gen_random_decimal,
    gen_random_rational,
    hilbert_det_closed_form,
)
from ratdet.matrices import IntegerMatrix, row_denominators

from conftest import gauss_fraction_det


def test_gen_hilbert():
    assert gen_hilbert(1).rows == [[1]]
    H2 = gen_hilbert(2)
    assert H2.rows == [[1, Fraction(1, 2)], [Fraction(1, 2), Fraction(1, 3)]]
    assert gen_hilbert(3).rows[2][2] == Fraction(1, 5)
    with pytest.raises(ValueError):
        gen_hilbert(0)


def test_gen_hilbert_structured():
    H = gen_hilbert(5, structured=True)
    assert H.hankel_values is not None
    assert len(H.hankel_values) == 9
    assert gen_hilbert(5).hankel_values is None


def test_hilbert_det_closed_form():
    assert hilbert_det_closed_form(1) == 1
    assert hilbert_det_closed_form(2) == Fraction(1, 12)
    assert hilbert_det_closed_form(3) == Fraction(1, 2160)
    for m in range(1, 13):
        assert hilbert_det_closed_form(m) == gauss_fraction_det(gen_hilbert(m).rows)


def test_gen_random_decimal():
    A = gen_random_decimal(6, places=1, seed=42)
    scale = 10
    for row in A.rows:
        for e in row:
            assert 0 <= e <= 1
            assert (e * scale).denominator == 1
    assert gen_random_decimal(6, 1, seed=42) == A
    assert gen_random_decimal(6, 1, seed=43) != A

    B = gen_random_decimal(5, places=6, seed=1)
    for d in row_denominators(B).row_dens:
        assert 10 ** 6 % d == 0


def test_gen_random_rational():
    A = gen_random_rational(5, max_den=7, seed=3)
    for row in A.rows:
        for e in row:
            assert e.denominator <= 7
            assert abs(e) <= 7
    assert gen_random_rational(5, 7, seed=3) == A


def test_cf_approximant_examples():
    assert cf_approximant(Fraction(333333, 1000000), 100) == Fraction(1, 3)
    assert cf_approximant(Fraction(1, 2), 10) == Fraction(1, 2)
    assert cf_approximant(Fraction(3141592, 1000000), 200) == Fraction(355, 113)
    with pytest.raises(ValueError):
        cf_approximant(Fraction(1, 2), 0)


def test_cf_approximant_is_optimal(rng):
    for _ in range(60):
        target = Fraction(rng.randrange(-10 ** 6, 10 ** 6), rng.randrange(1, 10 ** 6))
        bound = rng.randrange(1, 500)
        best = cf_approximant(target, bound)
        assert best.denominator <= bound
        err = abs(best - target)
        brute = min(
            abs(Fraction(round(target * b), b) - target) for b in range(1, bound + 1)
        )
        assert err == brute


def test_approximate_entries():
    A = gen_random_decimal(4, places=6, seed=5)
    B = approximate_entries(A, 50)
    assert all(e.denominator <= 50 for row in B.rows for e in row)


def test_bareiss_determinant(rng):
    assert bareiss_determinant(IntegerMatrix([[1, 2], [3, 4]])) == -2
    assert bareiss_determinant(IntegerMatrix([[1, 1], [1, 1]])) == 0
    for _ in range(80):
        m = rng.randrange(1, 8)
        rows = [[rng.randint(-9, 9) for _ in range(m)] for _ in range(m)]
        assert bareiss_determinant(IntegerMatrix(rows)) == gauss_fraction_det(rows)


def test_exact_rational_determinant(rng):
    for _ in range(40):
        m = rng.randrange(1, 7)
        A = gen_random_rational(m, 12, seed=rng.randrange(10 ** 9))
        assert exact_rational_determinant(A) == gauss_fraction_det(A.rows)


def test_matrix_source_specs():
    s = MatrixSource.from_spec("hilbert:4")
    assert s.kind == "hilbert" and s.m == 4
    assert s.load().rows == gen_hilbert(4).rows
    assert s.matrix_id() == "hilbert4"

    s2 = MatrixSource.from_spec("random:5,3", seed=9)
    assert s2.kind == "random_decimal" and (s2.m, s2.places) == (5, 3)
    assert s2.load() == gen_random_decimal(5, 3, seed=9)
    assert s2.matrix_id() == "random5x3"

    s3 = MatrixSource.from_spec("rational:6,9", seed=2)
    assert s3.load() == gen_random_rational(6, 9, seed=2)

    with pytest.raises(ValueError):
        MatrixSource.from_spec("banded:3")
    with pytest.raises(ValueError):
        MatrixSource.from_spec("hilbert:x")
