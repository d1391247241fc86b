"""Dixon p-adic lifting for exact linear solves over the integers.

One LU factorization mod p is reused to lift the solution of A x = b digit
by digit modulo p^k.  Termination is output-sensitive: at quadratically
spaced step counts every component is run through rational reconstruction
with the symmetric sqrt(M/2) bounds, and a full-vector candidate is accepted
only after an exact integer verification of A x = b.  A hard cap derived
from Hadamard-style bounds guarantees the loop always ends.

The denominator lcm of a solved system divides the largest invariant factor
s_m of A, and equals it with high probability for random right-hand sides;
that is how the hybrid determinant strategy extracts a large integer part
of det(A) cheaply.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .matrices import IntegerMatrix, image_integer, _ceil_sqrt
from .modular import PrimeStream, SingularModP, lu_factor
from .reconstruct import RatrecSchedule, ratrec, wang_bounds


class InconsistentSystem(ArithmeticError):
    """Lifting reached its certified cap without producing a verified solution."""


@dataclass(frozen=True)
class DixonSolution:
    """Exact solution of A x = b with its denominator lcm and step count."""

    solution: tuple
    den_lcm: int
    lifting_steps: int


@dataclass(frozen=True)
class InvariantEstimate:
    """lcm of solution denominators over several random solves.

    The estimate always divides det(A); it equals the largest invariant
    factor s_m with high probability in the number of trials.
    """

    s_m_estimate: int
    trials: int


def _cramer_bounds(A: IntegerMatrix, b) -> tuple[int, int]:
    # Column-norm Hadamard bounds: den(x_j) divides det(A), and the
    # numerator of x_j is at most ||b|| times the product of the other
    # column norms (Cramer with column j replaced by b).
    col_sq = [sum(e * e for e in col) for col in zip(*A.rows)]
    b_sq = sum(e * e for e in b)
    prod = math.prod(col_sq)
    den_bound = _ceil_sqrt(prod)
    num_bound = _ceil_sqrt(max(b_sq, 1) * (prod // min(col_sq)))
    return num_bound, den_bound


def _verified(A: IntegerMatrix, b, candidate: list[Fraction]) -> bool:
    # Check A x = b exactly with one integer matvec on the scaled solution.
    dl = math.lcm(*(c.denominator for c in candidate))
    z = [c.numerator * (dl // c.denominator) for c in candidate]
    for row, rhs in zip(A.rows, b):
        if sum(e * zj for e, zj in zip(row, z)) != dl * rhs:
            return False
    return True


def dixon_solve(A: IntegerMatrix, b, p: int) -> DixonSolution:
    """Solve A x = b exactly by p-adic lifting mod powers of p.

    A must be nonsingular mod p (SingularModP propagates from the
    factorization; redraw the prime).  The returned solution is verified
    exactly before returning.
    """
    m = A.dim
    b = [int(v) for v in b]
    if len(b) != m:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m}")
    factor = lu_factor(image_integer(A, p))

    num_bound, den_bound = _cramer_bounds(A, b)
    cap = 2 * (num_bound + 1) * (den_bound + 1)

    rows = A.rows
    residual = b[:]
    x = [0] * m
    pk = 1
    steps = 0
    schedule = RatrecSchedule()

    def attempt(nb: int, db: int) -> list[Fraction] | None:
        out = []
        for xj in x:
            frac = ratrec(xj % pk, pk, nb, db)
            if frac is None:
                return None
            out.append(frac)
        return out

    while True:
        digit = factor.solve(residual)
        x = [xj + pk * dj for xj, dj in zip(x, digit)]
        residual = [
            (ri - sum(e * dj for e, dj in zip(row, digit))) // p
            for ri, row in zip(residual, rows)
        ]
        pk *= p
        steps += 1

        if schedule.due(steps - 1):
            schedule.advance()
            candidate = attempt(*wang_bounds(pk))
            if candidate is not None and _verified(A, b, candidate):
                return _solution(candidate, steps)

        if pk > cap:
            candidate = attempt(num_bound + 1, den_bound + 1)
            if candidate is not None and _verified(A, b, candidate):
                return _solution(candidate, steps)
            raise InconsistentSystem(
                "no solution within certified bounds; matrix is singular over Q"
            )


def _solution(candidate: list[Fraction], steps: int) -> DixonSolution:
    dl = math.lcm(*(c.denominator for c in candidate))
    return DixonSolution(tuple(candidate), dl, steps)


def largest_invariant_factor(
    A: IntegerMatrix,
    primes: PrimeStream,
    trials: int = 2,
    rng: random.Random | None = None,
    retries: int = 8,
) -> InvariantEstimate:
    """Estimate s_m(A) as the lcm of denominator lcms of random solves.

    All trials share one prime (the first from `primes` for which A is
    nonsingular).  Right-hand sides are drawn uniformly from [-2^20, 2^20],
    large enough that the estimate hits s_m with high probability without
    inflating the lifting length.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = rng if rng is not None else random.Random()
    p = None
    for _ in range(retries):
        q = primes.next_prime()
        try:
            lu_factor(image_integer(A, q))
        except SingularModP:
            continue
        p = q
        break
    if p is None:
        raise SingularModP(f"singular mod {retries} consecutive primes")

    estimate = 1
    for _ in range(trials):
        b = [rng.randint(-(1 << 20), 1 << 20) for _ in range(A.dim)]
        sol = dixon_solve(A, b, p)
        estimate = math.lcm(estimate, sol.den_lcm)
    return InvariantEstimate(estimate, trials)
