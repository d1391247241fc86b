"""Exact Matrix Market ingestion and serialization.

Supported: array and coordinate formats, real and integer fields, general
and symmetric storage.  Every decimal literal is converted to an exact
fraction with a power-of-ten denominator -- values never pass through
floating point, which is the one non-negotiable rule here: a single float
round-trip would corrupt the determinant beyond repair.

Harwell-Boeing native files are not parsed; the usual collections ship the
same matrices in Matrix Market form.
"""

import re
from fractions import Fraction

from .matrices import RationalMatrix

_DECIMAL_RE = re.compile(
    r"""^[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eEdD][+-]?\d+)?$"""
)
_INTEGER_RE = re.compile(r"^[+-]?\d+$")


class ParseError(ValueError):
    """Malformed Matrix Market input; message carries the 1-based line number."""


class UnsupportedField(ParseError):
    """Field or symmetry outside the supported subset."""


def parse_decimal(token: str) -> Fraction:
    """Exact rational value of a decimal literal like '-1.25e-3'.

    Fortran-style 'd' exponents are accepted.  The result has a
    power-of-ten denominator before reduction.
    """
    if not _DECIMAL_RE.match(token):
        raise ValueError(f"not a decimal literal: {token!r}")
    return Fraction(token.lower().replace("d", "e"))


def _parse_value(token: str, field: str, lineno: int) -> Fraction:
    try:
        if field == "integer":
            if not _INTEGER_RE.match(token):
                raise ValueError(f"not an integer literal: {token!r}")
            return Fraction(int(token))
        return parse_decimal(token)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc


def parse_matrix_market(text: str) -> RationalMatrix:
    """Parse Matrix Market text into an exact square rational matrix."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("line 1: empty input")
    header = lines[0].split()
    if len(header) != 5 or header[0].lower() != "%%matrixmarket" or header[1].lower() != "matrix":
        raise ParseError("line 1: expected '%%MatrixMarket matrix <format> <field> <symmetry>'")
    fmt, fieldname, symmetry = (w.lower() for w in header[2:5])
    if fmt not in ("array", "coordinate"):
        raise ParseError(f"line 1: unsupported format {fmt!r}")
    if fieldname not in ("real", "integer"):
        raise UnsupportedField(f"line 1: unsupported field {fieldname!r}")
    if symmetry not in ("general", "symmetric"):
        raise UnsupportedField(f"line 1: unsupported symmetry {symmetry!r}")

    # (lineno, tokens) with comments and blank lines dropped
    body = [
        (i + 1, line.split())
        for i, line in enumerate(lines)
        if i > 0 and line.strip() and not line.lstrip().startswith("%")
    ]
    if not body:
        raise ParseError("line 1: missing size line")
    size_lineno, size = body[0]
    data = body[1:]

    if fmt == "array":
        return _parse_array(size, size_lineno, data, fieldname, symmetry)
    return _parse_coordinate(size, size_lineno, data, fieldname, symmetry)


def _read_dims(size, lineno, expect: int):
    try:
        dims = [int(t) for t in size]
    except ValueError as exc:
        raise ParseError(f"line {lineno}: bad size line: {exc}") from exc
    if len(dims) != expect or any(d < 0 for d in dims):
        raise ParseError(f"line {lineno}: expected {expect} non-negative sizes")
    if dims[0] != dims[1]:
        raise ParseError(f"line {lineno}: matrix must be square, got {dims[0]}x{dims[1]}")
    if dims[0] == 0:
        raise ParseError(f"line {lineno}: empty matrix")
    return dims


def _parse_array(size, size_lineno, data, fieldname, symmetry):
    m = _read_dims(size, size_lineno, 2)[0]
    values = []
    for lineno, tokens in data:
        for tok in tokens:
            values.append((lineno, tok))
    expected = m * m if symmetry == "general" else m * (m + 1) // 2
    if len(values) != expected:
        raise ParseError(
            f"line {size_lineno}: expected {expected} array entries, got {len(values)}"
        )
    rows = [[None] * m for _ in range(m)]
    it = iter(values)
    # Array storage is column-major; symmetric files carry the lower triangle.
    for j in range(m):
        for i in range(j if symmetry == "symmetric" else 0, m):
            lineno, tok = next(it)
            val = _parse_value(tok, fieldname, lineno)
            rows[i][j] = val
            if symmetry == "symmetric":
                rows[j][i] = val
    return RationalMatrix(rows)


def _parse_coordinate(size, size_lineno, data, fieldname, symmetry):
    m, _, nnz = _read_dims(size, size_lineno, 3)
    if len(data) != nnz:
        raise ParseError(f"line {size_lineno}: expected {nnz} entries, got {len(data)}")
    rows = [[Fraction(0)] * m for _ in range(m)]
    seen = set()
    for lineno, tokens in data:
        if len(tokens) != 3:
            raise ParseError(f"line {lineno}: expected 'i j value'")
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: bad indices: {exc}") from exc
        if not (1 <= i <= m and 1 <= j <= m):
            raise ParseError(f"line {lineno}: index ({i}, {j}) out of range")
        if (i, j) in seen:
            raise ParseError(f"line {lineno}: duplicate entry ({i}, {j})")
        seen.add((i, j))
        val = _parse_value(tokens[2], fieldname, lineno)
        rows[i - 1][j - 1] = val
        if symmetry == "symmetric" and i != j:
            rows[j - 1][i - 1] = val
    return RationalMatrix(rows)


def _exact_decimal(value: Fraction) -> str:
    """Render a fraction whose denominator is 2^a * 5^b as an exact decimal."""
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(
            f"{value} has no finite decimal expansion; only denominators of the "
            "form 2^a * 5^b can be serialized exactly"
        )
    k = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** k // value.denominator
    digits = str(scaled).rjust(k + 1, "0")
    sign = "-" if value.numerator < 0 else ""
    if k == 0:
        return f"{sign}{digits}"
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


def serialize_matrix_market(A: RationalMatrix) -> str:
    """Serialize to array/real/general form with exact decimal entries.

    Raises ValueError when an entry has no finite decimal expansion; such
    matrices cannot round-trip through the real field.
    """
    m = A.dim
    out = ["%%MatrixMarket matrix array real general", f"{m} {m}"]
    for j in range(m):
        for i in range(m):
            out.append(_exact_decimal(A.rows[i][j]))
    return "\n".join(out) + "\n"
