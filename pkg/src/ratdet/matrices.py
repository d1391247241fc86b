"""Exact rational and integer matrices, preconditioning, and modular images.

The preconditioning step turns an m x m rational matrix A into an integer
matrix by clearing each row with the least common denominator D_i of its
entries.  Writing D for the product of the D_i, the scaled matrix At
satisfies det(At) = D * det(A), so D is always a multiple of the true
determinant denominator.  Certified numerator/denominator bounds follow
from the Hadamard inequality applied to At.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .modular import ModMatrix

Rational = Fraction

# Largest entry magnitude for which integer matrices keep a vectorized
# int64 shadow; (entry % p) stays exact below 2**62.
_INT64_NORM_LIMIT = 1 << 62


class ZeroDenominator(ZeroDivisionError):
    """A fraction was given a zero denominator."""


class BadPrime(ArithmeticError):
    """Some entry denominator vanishes mod p; redraw the prime."""

    def __init__(self, p: int):
        super().__init__(f"an entry denominator is divisible by {p}")
        self.prime = p


def canonicalize(num: int, den: int) -> Fraction:
    """num/den as a canonical fraction: positive denominator, gcd 1, 0 -> 0/1."""
    if den == 0:
        raise ZeroDenominator(f"{num}/0 is not a rational number")
    return Fraction(num, den)


def _ceil_sqrt(n: int) -> int:
    r = math.isqrt(n)
    return r if r * r == n else r + 1


class RationalMatrix:
    """Dense square matrix of canonical fractions.  Treated as immutable.

    `hankel_values`, when given, asserts that entry (i, j) equals
    values[i + j]; imaging then only computes the 2m-1 distinct values.
    Generators attach it explicitly; nothing here tries to detect it.
    """

    def __init__(self, rows, hankel_values=None):
        self.rows = [[Fraction(e) for e in row] for row in rows]
        m = len(self.rows)
        if m == 0 or any(len(r) != m for r in self.rows):
            raise ValueError("matrix must be square and non-empty")
        self.dim = m
        self.hankel_values = None
        if hankel_values is not None:
            vals = tuple(Fraction(v) for v in hankel_values)
            if len(vals) != 2 * m - 1:
                raise ValueError("hankel_values must have length 2*dim - 1")
            if any(self.rows[i][j] != vals[i + j] for i in range(m) for j in range(m)):
                raise ValueError("hankel_values disagree with the entries")
            self.hankel_values = vals
        self._flat = None
        self._hankel_idx = None

    def norm(self) -> int:
        """max(|numerator|, denominator) over all entries."""
        return max(max(abs(e.numerator), e.denominator) for row in self.rows for e in row)

    def transpose(self) -> "RationalMatrix":
        rows = [list(col) for col in zip(*self.rows)]
        return RationalMatrix(rows, hankel_values=self.hankel_values)

    def _flat_parts(self):
        # Cached flat numerator/denominator lists plus the distinct
        # denominators; imaging under many primes should not pay Fraction
        # attribute access (or repeated inversions) per prime.
        if self._flat is None:
            nums = []
            dens = []
            for row in self.rows:
                for e in row:
                    nums.append(e.numerator)
                    dens.append(e.denominator)
            self._flat = (nums, dens, sorted(set(dens)))
        return self._flat

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"RationalMatrix(dim={self.dim})"


class IntegerMatrix:
    """Dense square matrix of arbitrary-precision integers."""

    def __init__(self, rows):
        self.rows = [[int(e) for e in row] for row in rows]
        m = len(self.rows)
        if m == 0 or any(len(r) != m for r in self.rows):
            raise ValueError("matrix must be square and non-empty")
        self.dim = m
        self._int64 = None
        self._int64_known = False

    def norm(self) -> int:
        return max(abs(e) for row in self.rows for e in row)

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix([list(col) for col in zip(*self.rows)])

    def _int64_view(self):
        if not self._int64_known:
            self._int64_known = True
            if self.norm() < _INT64_NORM_LIMIT:
                self._int64 = np.array(self.rows, dtype=np.int64)
        return self._int64

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.rows == other.rows

    def __repr__(self):
        return f"IntegerMatrix(dim={self.dim})"


@dataclass(frozen=True)
class DenominatorProfile:
    """Per-row least common denominators D_i and their exact product D."""

    row_dens: tuple
    product: int


@dataclass(frozen=True)
class Bounds:
    """Certified determinant bounds: |numerator| <= num_bound, den | den_bound.

    hadamard is the (ceiled, exact-integer) Hadamard bound of the row-scaled
    integer matrix; num_bound = den_bound * hadamard.
    """

    hadamard: int
    den_bound: int
    num_bound: int


def row_denominators(A: RationalMatrix) -> DenominatorProfile:
    """lcm of the entry denominators of each row, plus the product of all rows."""
    dens = tuple(math.lcm(*(e.denominator for e in row)) for row in A.rows)
    return DenominatorProfile(dens, math.prod(dens))


def best_denominator_profile(A: RationalMatrix):
    """Pick the orientation (A or A^T) whose denominator product is smaller.

    Rows and columns are both legitimate; det is transpose-invariant, so
    strategies simply work on the transposed matrix when columns win.
    Returns (matrix, profile).
    """
    prof_r = row_denominators(A)
    At = A.transpose()
    prof_c = row_denominators(At)
    if prof_c.product < prof_r.product:
        return At, prof_c
    return A, prof_r


def precondition_matrix(A: RationalMatrix, profile: DenominatorProfile) -> IntegerMatrix:
    """Scale row i by D_i, producing the integer matrix with det = D * det(A)."""
    rows = []
    for row, d_i in zip(A.rows, profile.row_dens):
        rows.append([e.numerator * (d_i // e.denominator) for e in row])
    return IntegerMatrix(rows)


def image_rational(A: RationalMatrix, p: int) -> ModMatrix:
    """Entrywise image (num mod p) * (den mod p)^-1 of a rational matrix.

    Raises BadPrime when some denominator is divisible by p.  One inverse is
    computed per distinct denominator; repeated denominators are the norm in
    practice (decimal inputs, Hilbert-type matrices).
    """
    if A.hankel_values is not None:
        return _image_hankel(A, p)
    nums, dens, uniq = A._flat_parts()
    table = {}
    for d in uniq:
        dm = d % p
        if dm == 0:
            raise BadPrime(p)
        table[d] = pow(dm, -1, p)
    out = [n % p * table[d] % p for n, d in zip(nums, dens)]
    arr = np.array(out, dtype=np.int64).reshape(A.dim, A.dim)
    return ModMatrix(p, arr)


def _image_hankel(A: RationalMatrix, p: int) -> ModMatrix:
    # 2m-1 entry images, then a constant-diagonal fill.
    m = A.dim
    vals = []
    for v in A.hankel_values:
        dm = v.denominator % p
        if dm == 0:
            raise BadPrime(p)
        vals.append((v.numerator % p) * pow(dm, -1, p) % p)
    table = np.array(vals, dtype=np.int64)
    if A._hankel_idx is None:
        A._hankel_idx = np.add.outer(np.arange(m), np.arange(m))
    return ModMatrix(p, table[A._hankel_idx])


def image_integer(M: IntegerMatrix, p: int) -> ModMatrix:
    """Entrywise reduction of an integer matrix into [0, p)."""
    shadow = M._int64_view()
    if shadow is not None:
        return ModMatrix(p, shadow % p)
    arr = np.array([e % p for row in M.rows for e in row], dtype=np.int64)
    return ModMatrix(p, arr.reshape(M.dim, M.dim))


def hadamard_bound(M: IntegerMatrix) -> int:
    """ceil of the product of row Euclidean norms, >= |det(M)|, exactly.

    Computed over the integers (sums of squares, one integer square root),
    never through floating point.  Clamped to >= 1 so it can serve as a
    modulus target even for matrices with a zero row.
    """
    prod = 1
    for row in M.rows:
        prod *= sum(e * e for e in row)
    return max(1, _ceil_sqrt(prod))


def determinant_bounds(A: RationalMatrix, profile: DenominatorProfile | None = None) -> Bounds:
    """Certified bounds for det(A) = n/d: |n| <= N, d | D, with N = D * H."""
    if profile is None:
        profile = row_denominators(A)
    h = hadamard_bound(precondition_matrix(A, profile))
    return Bounds(hadamard=h, den_bound=profile.product, num_bound=profile.product * h)
