"""Fraction-free exact determinants (Bareiss elimination).

Independent of the modular machinery; used as the reference oracle for the
CRT strategies and exposed through the command line for cross-checking.
"""

from fractions import Fraction

from .matrices import IntegerMatrix, RationalMatrix, precondition_matrix, row_denominators


def bareiss_determinant(M: IntegerMatrix) -> int:
    """Exact determinant of an integer matrix by Bareiss elimination.

    All intermediate divisions are exact, so entries stay minors of M
    rather than exploding like plain fraction arithmetic would.
    """
    a = [row[:] for row in M.rows]
    m = M.dim
    sign = 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            for i in range(k + 1, m):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, m):
            row_i = a[i]
            row_k = a[k]
            lead = row_i[k]
            for j in range(k + 1, m):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[m - 1][m - 1]


def exact_rational_determinant(A: RationalMatrix) -> Fraction:
    """det(A) by row preconditioning plus integer Bareiss elimination."""
    profile = row_denominators(A)
    det_scaled = bareiss_determinant(precondition_matrix(A, profile))
    return Fraction(det_scaled, profile.product)
