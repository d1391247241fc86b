"""Matrix generators with known structure or closed-form determinants."""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .matrices import RationalMatrix


def gen_hilbert(m: int, structured: bool = False) -> RationalMatrix:
    """Hilbert matrix H_m with entries 1/(i + j - 1), 1-based.

    With structured=True the matrix carries its Hankel value table, so
    modular imaging touches only the 2m-1 distinct entries.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    values = [Fraction(1, k) for k in range(1, 2 * m)]
    rows = [[values[i + j] for j in range(m)] for i in range(m)]
    return RationalMatrix(rows, hankel_values=values if structured else None)


def hilbert_det_closed_form(m: int) -> Fraction:
    """det(H_m) exactly: the reciprocal of prod_{k<m} (2k+1) * C(2k,k)^2."""
    if m < 1:
        raise ValueError("m must be >= 1")
    denom = 1
    for k in range(1, m):
        denom *= (2 * k + 1) * math.comb(2 * k, k) ** 2
    return Fraction(1, denom)


def gen_random_decimal(m: int, places: int = 6, seed: int | None = None) -> RationalMatrix:
    """Random matrix of decimal fractions k / 10^places, k uniform in [0, 10^places]."""
    if m < 1 or places < 1:
        raise ValueError("m and places must be >= 1")
    rng = random.Random(seed)
    scale = 10 ** places
    rows = [[Fraction(rng.randint(0, scale), scale) for _ in range(m)] for _ in range(m)]
    return RationalMatrix(rows)


def gen_random_rational(m: int, max_den: int = 50, seed: int | None = None) -> RationalMatrix:
    """Random matrix of fractions with numerators and denominators up to max_den."""
    if m < 1 or max_den < 1:
        raise ValueError("m and max_den must be >= 1")
    rng = random.Random(seed)
    rows = [
        [Fraction(rng.randint(-max_den, max_den), rng.randint(1, max_den)) for _ in range(m)]
        for _ in range(m)
    ]
    return RationalMatrix(rows)


def cf_approximant(r: Fraction, den_bound: int) -> Fraction:
    """Best rational approximation to r with denominator <= den_bound.

    Continued-fraction convergents/semiconvergents give the unique closest
    fraction under a denominator cap; Fraction.limit_denominator implements
    exactly that search.
    """
    if den_bound < 1:
        raise ValueError("den_bound must be >= 1")
    return Fraction(r).limit_denominator(den_bound)


def approximate_entries(A: RationalMatrix, den_bound: int) -> RationalMatrix:
    """Apply cf_approximant entrywise (Hankel structure does not survive)."""
    return RationalMatrix([[cf_approximant(e, den_bound) for e in row] for row in A.rows])


@dataclass(frozen=True)
class MatrixSource:
    """Where a benchmark or CLI matrix comes from.

    kind is one of "file", "hilbert", "random_decimal", "random_rational".
    """

    kind: str
    path: str | None = None
    m: int = 0
    places: int = 6
    max_den: int = 50
    seed: int | None = None
    structured: bool = False

    @classmethod
    def from_spec(cls, spec: str, seed: int | None = None,
                  structured: bool = False) -> "MatrixSource":
        """Parse generator specs like "hilbert:40", "random:50,6", "rational:20,9"."""
        name, _, args = spec.partition(":")
        name = name.strip().lower()
        parts = [a for a in args.split(",") if a.strip()]
        try:
            if name == "hilbert":
                (m,) = map(int, parts)
                return cls("hilbert", m=m, seed=seed, structured=structured)
            if name == "random":
                m, *rest = map(int, parts)
                places = rest[0] if rest else 6
                return cls("random_decimal", m=m, places=places, seed=seed)
            if name == "rational":
                m, *rest = map(int, parts)
                max_den = rest[0] if rest else 50
                return cls("random_rational", m=m, max_den=max_den, seed=seed)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"bad generator spec {spec!r}: {exc}") from exc
        raise ValueError(f"unknown generator {name!r} (expected hilbert/random/rational)")

    def load(self) -> RationalMatrix:
        if self.kind == "file":
            from .matrixmarket import parse_matrix_market

            with open(self.path, encoding="utf-8") as fh:
                return parse_matrix_market(fh.read())
        if self.kind == "hilbert":
            return gen_hilbert(self.m, structured=self.structured)
        if self.kind == "random_decimal":
            return gen_random_decimal(self.m, self.places, self.seed)
        if self.kind == "random_rational":
            return gen_random_rational(self.m, self.max_den, self.seed)
        raise ValueError(f"unknown source kind {self.kind!r}")

    def matrix_id(self) -> str:
        if self.kind == "file":
            stem = self.path.rsplit("/", 1)[-1]
            return stem.rsplit(".", 1)[0]
        if self.kind == "hilbert":
            return f"hilbert{self.m}"
        if self.kind == "random_decimal":
            return f"random{self.m}x{self.places}"
        return f"rational{self.m}x{self.max_den}"
