"""Incremental Chinese remaindering and rational number reconstruction.

The CRT side folds one prime at a time and keeps the accumulated residue in
the symmetric range (-M/2, M/2], so integer targets of either sign stabilize
as soon as the modulus passes them.  The reconstruction side recovers a
fraction a/b from its image u mod M with the extended Euclidean algorithm:
stop at the first remainder below the numerator bound and read the candidate
denominator off the cosequence.  With 2*N*D <= M the answer is unique; the
output-sensitive bounds N = D = floor(sqrt(M/2)) sit exactly on that edge,
which is what makes early termination possible long before any a priori
bound is reached.
"""

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class CrtState:
    """Accumulated CRT state: u = target mod `modulus`, symmetric range.

    stable_count is the number of consecutive folds that left the symmetric
    residue unchanged; iterations counts all folds.
    """

    modulus: int = 1
    residue: int = 0
    stable_count: int = 0
    iterations: int = 0


def crt_fold(state: CrtState, residue_p: int, p: int) -> CrtState:
    """Fold one fresh prime's residue into the state.

    p must be coprime to state.modulus (guaranteed when primes come from one
    PrimeStream).  The new residue is the unique representative in
    (-Mp/2, Mp/2] congruent to the old residue mod M and to residue_p mod p.
    """
    m_old, u_old = state.modulus, state.residue
    if m_old == 1:
        x = residue_p % p
        m_new = p
    else:
        t = (residue_p - u_old) * pow(m_old % p, -1, p) % p
        x = u_old + m_old * t
        m_new = m_old * p
    x %= m_new
    if 2 * x > m_new:
        x -= m_new
    stable = state.stable_count + 1 if x == u_old else 0
    return CrtState(m_new, x, stable, state.iterations + 1)


def early_terminated(state: CrtState, threshold: int = 2) -> bool:
    """True once the symmetric residue survived `threshold` extra folds."""
    return state.stable_count >= threshold


def ratrec(u: int, M: int, N: int, D: int) -> Fraction | None:
    """Reconstruct a/b = u (mod M) with |a| < N and 0 < b < D, else None.

    Runs the EEA on (M, u), stops at the first remainder r < N, and accepts
    the corresponding cosequence value t as denominator iff 0 < |t| < D,
    gcd(r, t) = 1, and the sign-normalized fraction is congruent to u.  The
    congruence re-check makes a returned fraction self-certifying: whatever
    the bounds, the output never violates its own contract.  None is an
    ordinary outcome ("no such fraction"), not an error.
    """
    if not 0 <= u < M:
        raise ValueError("u must satisfy 0 <= u < M")
    if N < 1 or D < 1:
        raise ValueError("bounds must be >= 1")
    if u == 0:
        return Fraction(0)
    r0, r1 = M, u
    t0, t1 = 0, 1
    while r1 >= N:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    num, den = r1, t1
    if den < 0:
        num, den = -num, -den
    if den == 0 or den >= D:
        return None
    if math.gcd(num, den) != 1:
        return None
    if (num - den * u) % M != 0:
        return None
    return Fraction(num, den)


def wang_bounds(M: int) -> tuple[int, int]:
    """Output-sensitive symmetric bounds N = D = floor(sqrt(M/2))."""
    if M < 2:
        raise ValueError("modulus must be >= 2")
    n = math.isqrt(M // 2)
    return max(1, n), max(1, n)


def heuristic_bounds(M: int, n_hint: int, d_hint: int) -> tuple[int, int]:
    """Asymmetric bounds sqrt(M/2 * N/D), sqrt(M/2 * D/N) from size hints.

    Each side is clamped to >= 1 and the product is capped so 2*N*D <= M
    still holds after clamping.
    """
    if M < 2:
        raise ValueError("modulus must be >= 2")
    if n_hint < 1 or d_hint < 1:
        raise ValueError("hints must be >= 1")
    n = max(1, math.isqrt(M * n_hint // (2 * d_hint)))
    d = max(1, math.isqrt(M * d_hint // (2 * n_hint)))
    if n >= d:
        n = min(n, max(1, M // (2 * d)))
    else:
        d = min(d, max(1, M // (2 * n)))
    return n, d


class RatrecSchedule:
    """Quadratic attempt schedule: reconstruction is due at iterations k^2.

    due(i) is true exactly when the 0-based iteration index equals the
    square of the attempt counter (0, 1, 4, 9, ...); advance() moves the
    counter past a due point.  The quadratic spacing keeps the total
    reconstruction cost a small fraction of the residue computations.
    """

    def __init__(self):
        self.attempts = 0

    def due(self, iteration: int) -> bool:
        return iteration == self.attempts * self.attempts

    def advance(self) -> None:
        self.attempts += 1
