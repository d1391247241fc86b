from fractions import Fraction

import pytest

from ratdet.generators import gen_random_decimal
from ratdet.matrixmarket import (
    ParseError,
    UnsupportedField,
    parse_decimal,
    parse_matrix_market,
    serialize_matrix_market,
)


def test_parse_decimal_exact():
    assert parse_decimal("0.5") == Fraction(1, 2)
    assert parse_decimal("1.5e-2") == Fraction(3, 200)
    assert parse_decimal("-2.5E3") == -2500
    assert parse_decimal("1.0d1") == 10  # fortran exponent
    assert parse_decimal(".25") == Fraction(1, 4)
    assert parse_decimal("3.") == 3
    # a value that floats cannot represent round-trips exactly
    assert parse_decimal("0.1") == Fraction(1, 10)
    with pytest.raises(ValueError):
        parse_decimal("1/3")
    with pytest.raises(ValueError):
        parse_decimal("0x10")


def test_parse_array():
    text = """%%MatrixMarket matrix array real general
% column-major storage
2 2
0.5
0.1
0.25
1
"""
    A = parse_matrix_market(text)
    assert A.rows == [[Fraction(1, 2), Fraction(1, 4)], [Fraction(1, 10), Fraction(1)]]


def test_parse_array_symmetric():
    text = """%%MatrixMarket matrix array real symmetric
2 2
1.5
0.5
2.5
"""
    A = parse_matrix_market(text)
    assert A.rows == [[Fraction(3, 2), Fraction(1, 2)], [Fraction(1, 2), Fraction(5, 2)]]


def test_parse_coordinate():
    text = """%%MatrixMarket matrix coordinate real general
3 3 3
1 1 1.0
2 2 1.5e-2
3 1 -4
"""
    A = parse_matrix_market(text)
    assert A.rows[0][0] == 1
    assert A.rows[1][1] == Fraction(3, 200)
    assert A.rows[2][0] == -4
    assert A.rows[0][1] == 0  # densified zero


def test_parse_coordinate_symmetric():
    text = """%%MatrixMarket matrix coordinate real symmetric
2 2 2
1 1 2.0
2 1 0.5
"""
    A = parse_matrix_market(text)
    assert A.rows[0][1] == Fraction(1, 2)
    assert A.rows[1][0] == Fraction(1, 2)


def test_parse_integer_field():
    text = """%%MatrixMarket matrix coordinate integer general
2 2 2
1 1 7
2 2 -3
"""
    A = parse_matrix_market(text)
    assert A.rows == [[7, 0], [0, -3]]


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 1"):
        parse_matrix_market("garbage\n1 1\n1\n")
    with pytest.raises(UnsupportedField, match="complex"):
        parse_matrix_market("%%MatrixMarket matrix array complex general\n1 1\n1 0\n")
    with pytest.raises(UnsupportedField, match="skew"):
        parse_matrix_market("%%MatrixMarket matrix array real skew-symmetric\n1 1\n1\n")
    with pytest.raises(ParseError, match="line 4"):
        parse_matrix_market(
            "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1.0\n2 2 oops\n"
        )
    with pytest.raises(ParseError, match="square"):
        parse_matrix_market("%%MatrixMarket matrix array real general\n2 3 \n" + "1\n" * 6)
    with pytest.raises(ParseError, match="duplicate"):
        parse_matrix_market(
            "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n1 1 2\n"
        )
    with pytest.raises(ParseError, match="out of range"):
        parse_matrix_market(
            "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n"
        )
    with pytest.raises(ParseError, match="expected 4"):
        parse_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n")


def test_round_trip_bit_exact(rng):
    for _ in range(15):
        A = gen_random_decimal(rng.randrange(1, 7), places=rng.randrange(1, 7),
                               seed=rng.randrange(10 ** 9))
        assert parse_matrix_market(serialize_matrix_market(A)) == A


def test_round_trip_negative_and_integer_entries():
    from ratdet.matrices import RationalMatrix

    A = RationalMatrix([[Fraction(-3, 8), Fraction(7)], [Fraction(1, 40), Fraction(0)]])
    text = serialize_matrix_market(A)
    assert parse_matrix_market(text) == A


def test_serialize_rejects_infinite_expansions():
    from ratdet.matrices import RationalMatrix

    A = RationalMatrix([[Fraction(1, 3)]])
    with pytest.raises(ValueError, match="decimal expansion"):
        serialize_matrix_market(A)
