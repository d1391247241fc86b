"""Determinant strategies for rational matrices.

Four ways to turn modular determinants into an exact fraction, plus an
adaptive front end:

* rat_lu          -- CRT on det(A) itself; rational reconstruction with
                     output-sensitive bounds recovers n/d.
* prec_det_lu     -- CRT on the integer D * det(A) (D = product of row
                     denominators); classic early termination applies.
* prec_mat_lu     -- scale A to an integer matrix once, then integer CRT.
* prec_mat_dixon  -- like prec_mat_lu, but first divide out the largest
                     invariant factor obtained from p-adic solves.
* adaptive_det    -- measures one rational and one integer image, picks the
                     cheaper backend, divides out s_m when the scaled matrix
                     is small, and keeps the rational-reconstruction exit.

All are Monte Carlo in the same sense: an early exit is accepted once the
reconstructed value has survived `et_threshold` extra primes.  With
force_bound_run the loops instead run out their certified bounds, which
makes the result deterministic.
"""

import random
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .dixon import InconsistentSystem, largest_invariant_factor
from .matrices import (
    BadPrime,
    RationalMatrix,
    best_denominator_profile,
    determinant_bounds,
    hadamard_bound,
    image_integer,
    image_rational,
    precondition_matrix,
)
from .modular import (
    MAX_PRIME_BITS,
    MIN_PRIME_BITS,
    PrimeStream,
    SingularModP,
    lu_determinant,
)
from .reconstruct import CrtState, RatrecSchedule, crt_fold, early_terminated, ratrec, wang_bounds


@dataclass(frozen=True)
class StrategyConfig:
    """Run parameters shared by every strategy."""

    prime_bits: int = 26
    et_threshold: int = 2
    dixon_trials: int = 2
    seed: int | None = None
    force_bound_run: bool = False
    # The invariant-factor phase of adaptive_det only fires when the scaled
    # matrix norm fits this many prime-sized words.
    adaptive_dixon_words: int = 2

    def __post_init__(self):
        if not MIN_PRIME_BITS <= self.prime_bits <= MAX_PRIME_BITS:
            raise ValueError(f"prime_bits must be in [{MIN_PRIME_BITS}, {MAX_PRIME_BITS}]")
        if self.et_threshold < 1:
            raise ValueError("et_threshold must be >= 1")
        if self.dixon_trials < 1:
            raise ValueError("dixon_trials must be >= 1")


@dataclass(frozen=True)
class DetResult:
    """Determinant as a canonical fraction plus run statistics.

    primes_used counts folded CRT primes (skipped primes and the p-adic
    phase's prime are not included).  When et_triggered is false the run
    was bound-complete: the modulus passed the certified target.
    """

    value: Fraction
    strategy: str
    primes_used: int
    ratrec_attempts: int
    et_triggered: bool
    wall_times: dict = field(default_factory=dict)


class _Phases:
    """perf_counter-based per-phase accumulator."""

    def __init__(self):
        self.t0 = time.perf_counter()
        self.acc = defaultdict(float)
        self._mark = self.t0

    def mark(self):
        self._mark = time.perf_counter()

    def add(self, phase: str):
        now = time.perf_counter()
        self.acc[phase] += now - self._mark
        self._mark = now

    def done(self) -> dict:
        out = dict(self.acc)
        out["total"] = time.perf_counter() - self.t0
        return out


def rat_lu(A: RationalMatrix, cfg: StrategyConfig | None = None) -> DetResult:
    """CRT on the rational determinant with reconstruction-based early exit.

    Per prime: image A, LU determinant, CRT fold.  At quadratically spaced
    iterations the symmetric residue is run through rational reconstruction
    with sqrt(M/2) bounds; since those bounds sit on the uniqueness edge, a
    first success may be spurious, so a candidate is only returned after it
    stays congruent to the determinant for et_threshold more fresh primes.
    If no candidate survives, the loop runs until the modulus passes the
    certified 2*N*D target, where the final reconstruction cannot fail.
    """
    cfg = cfg or StrategyConfig()
    phases = _Phases()
    stream = PrimeStream(cfg.prime_bits, cfg.seed)
    bounds = determinant_bounds(A)
    target = 2 * (bounds.num_bound + 1) * (bounds.den_bound + 1)
    phases.add("bounds")

    state = CrtState()
    schedule = RatrecSchedule()
    attempts = 0
    candidate = None
    confirmed = 0

    while True:
        p = stream.next_prime()
        phases.mark()
        try:
            img = image_rational(A, p)
        except BadPrime:
            continue
        phases.add("image")
        u_p = lu_determinant(img)
        phases.add("modular_det")
        state = crt_fold(state, u_p, p)

        if candidate is not None:
            if (candidate.numerator - candidate.denominator * u_p) % p == 0:
                confirmed += 1
                if confirmed >= cfg.et_threshold:
                    phases.add("reconstruct")
                    return DetResult(candidate, "rat_lu", state.iterations,
                                     attempts, True, phases.done())
            else:
                candidate, confirmed = None, 0

        if schedule.due(state.iterations - 1):
            schedule.advance()
            if candidate is None and not cfg.force_bound_run:
                attempts += 1
                n_b, d_b = wang_bounds(state.modulus)
                candidate = ratrec(state.residue % state.modulus, state.modulus, n_b, d_b)
                confirmed = 0
        phases.add("reconstruct")

        if state.modulus > target:
            phases.mark()
            attempts += 1
            value = ratrec(state.residue % state.modulus, state.modulus,
                           bounds.num_bound + 1, bounds.den_bound + 1)
            phases.add("reconstruct")
            if value is None:
                raise ArithmeticError("reconstruction failed past its certified bound")
            return DetResult(value, "rat_lu", state.iterations, attempts, False, phases.done())


def _integer_cra(stream, cfg, residue_at, abs_bound, phases):
    """Shared ET loop for integer targets: fold until stable or certified.

    residue_at(p) returns the target's residue in [0, p) or None to skip
    the prime.  abs_bound certifies |target|, so modulus > 2 * abs_bound
    ends a bound-complete run.  Returns (value, primes_used, et_triggered).
    """
    state = CrtState()
    target = 2 * abs_bound
    while True:
        p = stream.next_prime()
        r = residue_at(p)
        if r is None:
            continue
        state = crt_fold(state, r, p)
        phases.mark()
        if not cfg.force_bound_run and early_terminated(state, cfg.et_threshold):
            return state.residue, state.iterations, True
        if state.modulus > target:
            return state.residue, state.iterations, False


def prec_det_lu(A: RationalMatrix, cfg: StrategyConfig | None = None) -> DetResult:
    """CRT on the integer D * det(A), imaging the rational matrix per prime."""
    cfg = cfg or StrategyConfig()
    phases = _Phases()
    stream = PrimeStream(cfg.prime_bits, cfg.seed)
    oriented, profile = best_denominator_profile(A)
    den = profile.product
    h_bound = hadamard_bound(precondition_matrix(oriented, profile))
    phases.add("bounds")

    def residue_at(p):
        phases.mark()
        try:
            img = image_rational(oriented, p)
        except BadPrime:
            return None
        phases.add("image")
        r = den % p * lu_determinant(img) % p
        phases.add("modular_det")
        return r

    scaled, primes, et = _integer_cra(stream, cfg, residue_at, h_bound, phases)
    phases.add("reconstruct")
    return DetResult(Fraction(scaled, den), "prec_det_lu", primes, 0, et, phases.done())


def prec_mat_lu(A: RationalMatrix, cfg: StrategyConfig | None = None) -> DetResult:
    """Integer CRT on det of the row-scaled matrix, dividing D back out."""
    cfg = cfg or StrategyConfig()
    phases = _Phases()
    stream = PrimeStream(cfg.prime_bits, cfg.seed)
    oriented, profile = best_denominator_profile(A)
    den = profile.product
    scaled_matrix = precondition_matrix(oriented, profile)
    h_bound = hadamard_bound(scaled_matrix)
    phases.add("bounds")

    def residue_at(p):
        phases.mark()
        img = image_integer(scaled_matrix, p)
        phases.add("image")
        r = lu_determinant(img)
        phases.add("modular_det")
        return r

    scaled, primes, et = _integer_cra(stream, cfg, residue_at, h_bound, phases)
    phases.add("reconstruct")
    return DetResult(Fraction(scaled, den), "prec_mat_lu", primes, 0, et, phases.done())


def prec_mat_dixon(A: RationalMatrix, cfg: StrategyConfig | None = None) -> DetResult:
    """Hybrid: divide det of the scaled matrix by its largest invariant factor.

    p-adic solves against random right-hand sides give a factor pi dividing
    det; the CRT loop then reconstructs the much smaller det / pi.  When the
    matrix is singular mod several consecutive primes (or lifting fails),
    the strategy falls back to the plain integer CRT loop, which handles
    genuinely singular inputs through the usual zero-residue termination.
    """
    cfg = cfg or StrategyConfig()
    phases = _Phases()
    stream = PrimeStream(cfg.prime_bits, cfg.seed)
    rng = random.Random(None if cfg.seed is None else cfg.seed ^ 0x9E3779B9)
    oriented, profile = best_denominator_profile(A)
    den = profile.product
    scaled_matrix = precondition_matrix(oriented, profile)
    h_bound = hadamard_bound(scaled_matrix)
    phases.add("bounds")

    pi = 1
    try:
        pi = largest_invariant_factor(
            scaled_matrix, stream, trials=cfg.dixon_trials, rng=rng
        ).s_m_estimate
    except (SingularModP, InconsistentSystem):
        pi = 1
    phases.add("dixon")

    def residue_at(p):
        if pi % p == 0:
            return None
        phases.mark()
        img = image_integer(scaled_matrix, p)
        phases.add("image")
        r = lu_determinant(img) * pow(pi % p, -1, p) % p
        phases.add("modular_det")
        return r

    part, primes, et = _integer_cra(stream, cfg, residue_at, h_bound // pi + 1, phases)
    phases.add("reconstruct")
    return DetResult(Fraction(part * pi, den), "prec_mat_dixon", primes, 0, et, phases.done())


def adaptive_det(A: RationalMatrix, cfg: StrategyConfig | None = None) -> DetResult:
    """Adaptive strategy: measured backend choice plus every exit at once.

    1. Compute the denominator profile and the scaled integer matrix.
    2. If the scaled norm fits a couple of prime words, extract the largest
       invariant factor N by p-adic lifting; otherwise N = 1.
    3. Time one rational and one integer image and pick the faster backend.
    4. Run the ET CRT loop on the integer (D / N) * det(A).
    5. At quadratically spaced iterations, additionally try the full
       rational reconstruction exit, confirmed over et_threshold primes.
    """
    cfg = cfg or StrategyConfig()
    phases = _Phases()
    stream = PrimeStream(cfg.prime_bits, cfg.seed)
    rng = random.Random(None if cfg.seed is None else cfg.seed ^ 0x9E3779B9)
    oriented, profile = best_denominator_profile(A)
    den = profile.product
    scaled_matrix = precondition_matrix(oriented, profile)
    h_bound = hadamard_bound(scaled_matrix)
    phases.add("bounds")

    factor = 1
    if scaled_matrix.norm().bit_length() <= cfg.prime_bits * cfg.adaptive_dixon_words:
        try:
            factor = largest_invariant_factor(
                scaled_matrix, stream, trials=cfg.dixon_trials, rng=rng
            ).s_m_estimate
        except (SingularModP, InconsistentSystem):
            factor = 1
    phases.add("dixon")

    # Measured backend selection: one probe image each way.
    use_rational = False
    for _ in range(4):
        probe = stream.next_prime()
        try:
            t0 = time.perf_counter()
            image_rational(oriented, probe)
            t_rat = time.perf_counter() - t0
        except BadPrime:
            continue
        t0 = time.perf_counter()
        image_integer(scaled_matrix, probe)
        t_int = time.perf_counter() - t0
        use_rational = t_rat < t_int
        break
    phases.add("probe")

    state = CrtState()
    schedule = RatrecSchedule()
    attempts = 0
    candidate = None  # (fraction, implied integer target value)
    confirmed = 0
    target = 2 * (h_bound // factor + 1)
    tag = "adaptive"

    while True:
        p = stream.next_prime()
        if factor % p == 0 or den % p == 0:
            continue
        phases.mark()
        if use_rational:
            try:
                img = image_rational(oriented, p)
            except BadPrime:
                continue
            phases.add("image")
            u_p = den % p * lu_determinant(img) % p
        else:
            img = image_integer(scaled_matrix, p)
            phases.add("image")
            u_p = lu_determinant(img)
        r = u_p * pow(factor % p, -1, p) % p
        phases.add("modular_det")
        state = crt_fold(state, r, p)

        if candidate is not None:
            if (candidate[1] - r) % p == 0:
                confirmed += 1
                if confirmed >= cfg.et_threshold:
                    phases.add("reconstruct")
                    return DetResult(candidate[0], tag, state.iterations,
                                     attempts, True, phases.done())
            else:
                candidate, confirmed = None, 0

        if not cfg.force_bound_run and early_terminated(state, cfg.et_threshold):
            phases.add("reconstruct")
            value = Fraction(state.residue * factor, den)
            return DetResult(value, tag, state.iterations, attempts, True, phases.done())

        if schedule.due(state.iterations - 1):
            schedule.advance()
            if candidate is None and not cfg.force_bound_run:
                attempts += 1
                m_now = state.modulus
                u_det = (state.residue % m_now) * factor % m_now * pow(den, -1, m_now) % m_now
                n_b, d_b = wang_bounds(m_now)
                frac = ratrec(u_det, m_now, n_b, d_b)
                if frac is not None:
                    implied = Fraction(frac.numerator * den, frac.denominator * factor)
                    if implied.denominator == 1:
                        candidate = (frac, implied.numerator)
                        confirmed = 0
        phases.add("reconstruct")

        if state.modulus > target:
            value = Fraction(state.residue * factor, den)
            return DetResult(value, tag, state.iterations, attempts, False, phases.done())


STRATEGIES = {
    "ratlu": rat_lu,
    "precdet": prec_det_lu,
    "precmat": prec_mat_lu,
    "dixon": prec_mat_dixon,
    "adaptive": adaptive_det,
}
