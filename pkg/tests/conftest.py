"""Shared oracles for the test suite.

These are deliberately naive, independent implementations: plain Fraction
Gaussian elimination, cofactor expansion, and a textbook Smith normal form
reduction.  They validate the production code paths without sharing any of
their machinery.
"""

from fractions import Fraction

import pytest


def gauss_fraction_det(rows) -> Fraction:
    """Exact determinant by fraction Gaussian elimination with pivoting."""
    a = [[Fraction(e) for e in row] for row in rows]
    m = len(a)
    det = Fraction(1)
    for k in range(m):
        pivot_row = next((i for i in range(k, m) if a[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, m):
            factor = a[i][k] * inv
            if factor:
                for j in range(k, m):
                    a[i][j] -= factor * a[k][j]
    return det


def gauss_fraction_solve(rows, b) -> list[Fraction]:
    """Exact solve of a nonsingular system by Gaussian elimination."""
    m = len(rows)
    a = [[Fraction(e) for e in row] + [Fraction(v)] for row, v in zip(rows, b)]
    for k in range(m):
        pivot_row = next(i for i in range(k, m) if a[i][k] != 0)
        a[k], a[pivot_row] = a[pivot_row], a[k]
        inv = 1 / a[k][k]
        for i in range(m):
            if i != k and a[i][k]:
                factor = a[i][k] * inv
                for j in range(k, m + 1):
                    a[i][j] -= factor * a[k][j]
    return [a[i][m] / a[i][i] for i in range(m)]


def cofactor_det_mod(rows, p: int) -> int:
    """Determinant mod p by cofactor expansion; only sane for dim <= 6."""
    m = len(rows)
    if m == 1:
        return rows[0][0] % p
    total = 0
    for j in range(m):
        if rows[0][j] % p == 0:
            continue
        minor = [[rows[i][k] for k in range(m) if k != j] for i in range(1, m)]
        sign = 1 if j % 2 == 0 else -1
        total += sign * rows[0][j] * cofactor_det_mod(minor, p)
    return total % p


def smith_invariants(rows) -> list[int]:
    """Invariant factors of an integer matrix by textbook row/col reduction.

    Returns the nonzero diagonal of the Smith normal form (d1 | d2 | ...).
    Exponential-ish but fine for the small matrices used in tests.
    """
    a = [[int(e) for e in row] for row in rows]
    n = len(a)
    invariants = []
    top = 0
    while top < n:
        # Find the entry of least nonzero magnitude in the trailing block.
        best = None
        for i in range(top, n):
            for j in range(top, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        pivot = a[top][top]
        dirty = False
        for i in range(top + 1, n):
            q = a[i][top] // pivot
            if q:
                for j in range(top, n):
                    a[i][j] -= q * a[top][j]
            if a[i][top] != 0:
                dirty = True
        for j in range(top + 1, n):
            q = a[top][j] // pivot
            if q:
                for i in range(top, n):
                    a[i][j] -= q * a[i][top]
            if a[top][j] != 0:
                dirty = True
        if dirty:
            continue
        # Pivot must divide every remaining entry; fix up by row addition.
        offender = None
        for i in range(top + 1, n):
            for j in range(top + 1, n):
                if a[i][j] % pivot != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(top, n):
                a[top][j] += a[offender][j]
            continue
        invariants.append(abs(pivot))
        top += 1
    return invariants


@pytest.fixture
def rng():
    import random

    return random.Random(20260810)
