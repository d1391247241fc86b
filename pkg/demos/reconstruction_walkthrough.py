#!/usr/bin/env python3
"""Step-by-step look at the number-theoretic core: CRT folds and ratrec.

Follows det(A) = -22/7 through a run of the rational CRT loop: residues
accumulate, the symmetric representative wobbles, and at quadratically
spaced checkpoints the extended Euclidean algorithm tries to read a fraction
out of the residue.  Once the modulus passes 2 * max(n^2, d^2) the right
fraction appears and keeps re-appearing; the loop accepts it after it
survives two extra primes.
"""

from fractions import Fraction

from ratdet import PrimeStream, RationalMatrix, rat_lu, StrategyConfig
from ratdet.reconstruct import CrtState, RatrecSchedule, crt_fold, ratrec, wang_bounds

TARGET = Fraction(-22, 7)


def main():
    print(f"target fraction: {TARGET}\n")
    stream = PrimeStream(20, seed=4)
    state = CrtState()
    schedule = RatrecSchedule()
    accepted = None
    for step in range(12):
        p = stream.next_prime()
        residue = TARGET.numerator * pow(TARGET.denominator, -1, p) % p
        state = crt_fold(state, residue, p)
        note = ""
        if schedule.due(state.iterations - 1):
            schedule.advance()
            n_bound, d_bound = wang_bounds(state.modulus)
            guess = ratrec(state.residue % state.modulus, state.modulus, n_bound, d_bound)
            note = f"  ratrec(N=D={n_bound}) -> {guess}"
            if guess == TARGET and accepted is None:
                accepted = state.iterations
        print(f"fold {state.iterations:2d}: p={p}  u={state.residue}  "
              f"log2(M)={state.modulus.bit_length() - 1:3d}{note}")
    print(f"\ncorrect fraction first reconstructed at fold {accepted}; "
          "2*max(n^2, d^2) needs only ~19 bits of modulus")

    # The same machinery drives rat_lu end to end:
    A = RationalMatrix([[TARGET, 0], [0, 1]])
    result = rat_lu(A, StrategyConfig(seed=4))
    print(f"\nrat_lu on diag({TARGET}, 1): {result.value} after "
          f"{result.primes_used} primes, {result.ratrec_attempts} ratrec attempts, "
          f"early termination: {result.et_triggered}")


if __name__ == "__main__":
    main()
