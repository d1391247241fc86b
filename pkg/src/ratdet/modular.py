"""Word-size prime fields: prime generation, modular inverses, and LU kernels.

Everything here works with odd primes p of 20 to 31 bits.  That range is a
hard constraint: residues live in numpy int64 arrays and the elimination /
substitution kernels rely on a single product of two residues fitting into
64 bits (2*31 = 62 bits, with room for one subtraction before reduction).
"""

import random
from dataclasses import dataclass, field

import numpy as np

MIN_PRIME_BITS = 20
MAX_PRIME_BITS = 31

# Witness set making Miller-Rabin deterministic for all n < 3.3 * 10^24,
# which comfortably covers every 64-bit input.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class ZeroInverse(ZeroDivisionError):
    """Requested the inverse of 0 mod p."""


class SingularModP(ArithmeticError):
    """Matrix is singular modulo the current prime; retry with a fresh one."""


class PrimePoolExhausted(RuntimeError):
    """A stream ran out of fresh primes of the requested bit length."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for n < 2**64."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeStream:
    """Deterministic stream of distinct uniformly sampled B-bit primes.

    A fixed seed reproduces the same sequence; a prime is never emitted
    twice by the same stream.  One stream should be shared by all phases
    of a computation so that no prime is reused anywhere in a run.
    """

    def __init__(self, bit_length: int = 26, seed: int | None = None):
        if not MIN_PRIME_BITS <= bit_length <= MAX_PRIME_BITS:
            raise ValueError(
                f"bit_length must be in [{MIN_PRIME_BITS}, {MAX_PRIME_BITS}], got {bit_length}"
            )
        self.bit_length = bit_length
        self._rng = random.Random(seed)
        self.emitted: set[int] = set()

    def next_prime(self) -> int:
        """Return a fresh prime p with 2**(B-1) < p < 2**B."""
        lo = 1 << (self.bit_length - 1)
        hi = 1 << self.bit_length
        # ~ (hi - lo) / ln(hi) primes exist; 4096 * B draws failing is not
        # a plausible random event, so treat it as pool exhaustion.
        for _ in range(4096 * self.bit_length):
            candidate = self._rng.randrange(lo + 1, hi, 2)
            if candidate not in self.emitted and is_prime(candidate):
                self.emitted.add(candidate)
                return candidate
        raise PrimePoolExhausted(f"no fresh {self.bit_length}-bit primes left")


def mod_inverse(a: int, p: int) -> int:
    """Inverse of a modulo the prime p, in (0, p)."""
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class ModMatrix:
    """Square matrix of residues mod a word-size prime, stored as int64."""

    modulus: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.modulus.bit_length() > MAX_PRIME_BITS:
            raise ValueError("modulus too large for the int64 kernels")
        if self.entries.ndim != 2 or self.entries.shape[0] != self.entries.shape[1]:
            raise ValueError("entries must be a square 2-d array")

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    @classmethod
    def from_rows(cls, rows, p: int) -> "ModMatrix":
        arr = np.array([[int(e) % p for e in row] for row in rows], dtype=np.int64)
        return cls(p, arr)


def _eliminate(a: np.ndarray, p: int, keep_factors: bool):
    """Gaussian elimination mod p with first-nonzero pivoting, in place.

    Returns (sign, perm, pivot_inverses) or None when a zero column is hit
    (matrix singular mod p).  With keep_factors the multipliers are stored
    below the diagonal so `a` becomes a packed LU factorization.
    """
    m = a.shape[0]
    perm = np.arange(m)
    invs = []
    sign = 1
    for k in range(m):
        nz = np.nonzero(a[k:, k])[0]
        if nz.size == 0:
            return None
        piv_row = k + int(nz[0])
        if piv_row != k:
            a[[k, piv_row]] = a[[piv_row, k]]
            perm[[k, piv_row]] = perm[[piv_row, k]]
            sign = -sign
        inv = pow(int(a[k, k]), -1, p)
        invs.append(inv)
        if k + 1 < m:
            factors = a[k + 1:, k] * inv % p
            # factors * row stays below 2**62 for p < 2**31, so one product
            # and one subtraction are safe before the reduction.
            a[k + 1:, k + 1:] = (a[k + 1:, k + 1:] - factors[:, None] * a[k, k + 1:]) % p
            a[k + 1:, k] = factors if keep_factors else 0
    return sign, perm, invs


def lu_determinant(M: ModMatrix) -> int:
    """det(M) mod p in [0, p); 0 for matrices singular mod p."""
    a = M.entries.copy()
    outcome = _eliminate(a, M.modulus, keep_factors=False)
    if outcome is None:
        return 0
    sign, _, _ = outcome
    p = M.modulus
    det = 1
    for k in range(M.dim):
        det = det * int(a[k, k]) % p
    return det % p if sign == 1 else (p - det) % p


class Factorization:
    """Packed LU factorization of a ModMatrix, reusable for many solves."""

    def __init__(self, lu: np.ndarray, perm: np.ndarray, pivot_invs: list[int], p: int):
        self._lu = lu
        self._perm = perm
        self._invs = pivot_invs
        self.modulus = p

    @property
    def dim(self) -> int:
        return self._lu.shape[0]

    def solve(self, b) -> list[int]:
        """Solve M x = b (mod p); b entries may be arbitrary integers."""
        p = self.modulus
        m = self.dim
        if len(b) != m:
            raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
        y = np.array([int(v) % p for v in b], dtype=np.int64)[self._perm]
        lu = self._lu
        # Column sweeps keep every intermediate below 2**62.
        for k in range(m - 1):
            y[k + 1:] = (y[k + 1:] - lu[k + 1:, k] * y[k]) % p
        for k in range(m - 1, -1, -1):
            y[k] = y[k] * self._invs[k] % p
            if k:
                y[:k] = (y[:k] - lu[:k, k] * y[k]) % p
        return [int(v) for v in y]


def lu_factor(M: ModMatrix) -> Factorization:
    """Factor a matrix nonsingular mod p; raises SingularModP otherwise."""
    a = M.entries.copy()
    outcome = _eliminate(a, M.modulus, keep_factors=True)
    if outcome is None:
        raise SingularModP(f"matrix is singular mod {M.modulus}")
    _, perm, invs = outcome
    return Factorization(a, perm, invs, M.modulus)
