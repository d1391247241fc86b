"""ratdet: exact determinants of rational matrices via modular arithmetic.

The library computes det(A) for a dense matrix of fractions exactly, as a
canonical numerator/denominator pair, using word-size modular images, the
Chinese remainder theorem with early termination, rational reconstruction,
and p-adic lifting.  See `strategies` for the entry points.
"""

from .bareiss import bareiss_determinant, exact_rational_determinant
from .dixon import (
    DixonSolution,
    InconsistentSystem,
    InvariantEstimate,
    dixon_solve,
    largest_invariant_factor,
)
from .generators import (
    MatrixSource,
    approximate_entries,
    cf_approximant,
    gen_hilbert,
    gen_random_decimal,
    gen_random_rational,
    hilbert_det_closed_form,
)
from .matrices import (
    BadPrime,
    Bounds,
    DenominatorProfile,
    IntegerMatrix,
    Rational,
    RationalMatrix,
    ZeroDenominator,
    best_denominator_profile,
    canonicalize,
    determinant_bounds,
    hadamard_bound,
    image_integer,
    image_rational,
    precondition_matrix,
    row_denominators,
)
from .matrixmarket import ParseError, UnsupportedField, parse_matrix_market, serialize_matrix_market
from .modular import (
    Factorization,
    ModMatrix,
    PrimePoolExhausted,
    PrimeStream,
    SingularModP,
    ZeroInverse,
    is_prime,
    lu_determinant,
    lu_factor,
    mod_inverse,
)
from .reconstruct import (
    CrtState,
    RatrecSchedule,
    crt_fold,
    early_terminated,
    heuristic_bounds,
    ratrec,
    wang_bounds,
)
from .strategies import (
    STRATEGIES,
    DetResult,
    StrategyConfig,
    adaptive_det,
    prec_det_lu,
    prec_mat_dixon,
    prec_mat_lu,
    rat_lu,
)

__version__ = "0.1.0"

__all__ = [
    "BadPrime", "Bounds", "CrtState", "DenominatorProfile", "DetResult",
    "DixonSolution", "Factorization", "InconsistentSystem", "IntegerMatrix",
    "InvariantEstimate", "MatrixSource", "ModMatrix", "ParseError",
    "PrimePoolExhausted", "PrimeStream", "Rational", "RationalMatrix",
    "RatrecSchedule", "STRATEGIES", "SingularModP", "StrategyConfig",
    "UnsupportedField", "ZeroDenominator", "ZeroInverse", "adaptive_det",
    "approximate_entries", "bareiss_determinant", "best_denominator_profile",
    "canonicalize", "cf_approximant", "crt_fold", "determinant_bounds",
    "dixon_solve", "early_terminated", "exact_rational_determinant",
    "gen_hilbert", "gen_random_decimal", "gen_random_rational",
    "hadamard_bound", "heuristic_bounds", "hilbert_det_closed_form",
    "image_integer", "image_rational", "is_prime", "largest_invariant_factor",
    "lu_determinant", "lu_factor", "mod_inverse", "parse_matrix_market",
    "prec_det_lu", "prec_mat_dixon", "prec_mat_lu", "precondition_matrix",
    "rat_lu", "ratrec", "row_denominators", "serialize_matrix_market",
    "wang_bounds",
]
