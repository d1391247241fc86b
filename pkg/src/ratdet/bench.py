"""Benchmark harness: imaging cost comparison and strategy sweeps.

Imaging records compare the per-prime cost of reducing the rational matrix
against reducing its row-scaled integer counterpart (ratio > 1 means the
integer route is faster).  Strategy records capture wall time, primes used
and the size of the denominator over-approximation log2(D/d) / log2(d).
"""

import csv
import math
import time
from dataclasses import dataclass

from .generators import MatrixSource
from .matrices import (
    BadPrime,
    RationalMatrix,
    best_denominator_profile,
    image_integer,
    image_rational,
    precondition_matrix,
)
from .modular import PrimeStream
from .strategies import STRATEGIES, StrategyConfig

STRATEGY_CSV_COLUMNS = [
    "matrix_id", "m", "strategy", "wall_ms", "primes",
    "bits_n", "bits_d", "bits_D", "overapprox_ratio",
]

IMAGING_CSV_COLUMNS = [
    "matrix_id", "m", "primes", "rational_ms", "integer_ms",
    "structured_ms", "ratio", "bits_norm", "bits_scaled_norm",
]


def log2_int(n: int) -> float:
    """log2 of a positive integer of any size (math.log2 overflows floats)."""
    if n <= 0:
        raise ValueError("n must be positive")
    b = n.bit_length()
    if b <= 53:
        return math.log2(n)
    return (b - 53) + math.log2(n >> (b - 53))


def overapprox_ratio(den_bound: int, true_den: int) -> float:
    """Size of the denominator over-approximation: log2(D/d) / log2(d)."""
    if true_den == 1:
        return 0.0 if den_bound == 1 else float("inf")
    return log2_int(den_bound // true_den) / log2_int(true_den)


@dataclass(frozen=True)
class ImagingRecord:
    matrix_id: str
    m: int
    primes: int
    rational_ms: float
    integer_ms: float
    structured_ms: float | None
    ratio: float  # rational_ms / integer_ms; > 1 means integer imaging wins
    bits_norm: int
    bits_scaled_norm: int


@dataclass(frozen=True)
class BenchRecord:
    matrix_id: str
    m: int
    strategy: str
    wall_ms: float
    primes: int
    bits_n: int
    bits_d: int
    bits_D: int
    overapprox_ratio: float


def _time_images(imager, primes) -> float:
    total = 0.0
    for p in primes:
        t0 = time.perf_counter()
        try:
            imager(p)
        except BadPrime:
            continue
        total += time.perf_counter() - t0
    return total


def bench_imaging(source: MatrixSource, primes: int = 5,
                  prime_bits: int = 26, seed: int | None = None) -> ImagingRecord:
    """Time rational vs integer imaging of one matrix over several primes.

    When the source carries Hankel structure, the structured imaging time is
    measured as well, against a dense copy of the same matrix.
    """
    matrix = source.load()
    dense = matrix
    structured = None
    if matrix.hankel_values is not None:
        structured = matrix
        dense = RationalMatrix(matrix.rows)
    oriented, profile = best_denominator_profile(dense)
    scaled = precondition_matrix(oriented, profile)

    stream = PrimeStream(prime_bits, seed)
    ps = [stream.next_prime() for _ in range(primes)]

    t_rat = _time_images(lambda p: image_rational(dense, p), ps)
    t_int = _time_images(lambda p: image_integer(scaled, p), ps)
    t_struct = None
    if structured is not None:
        t_struct = _time_images(lambda p: image_rational(structured, p), ps) * 1e3

    return ImagingRecord(
        matrix_id=source.matrix_id(),
        m=dense.dim,
        primes=len(ps),
        rational_ms=t_rat * 1e3,
        integer_ms=t_int * 1e3,
        structured_ms=t_struct,
        ratio=t_rat / t_int if t_int > 0 else float("inf"),
        bits_norm=dense.norm().bit_length() - 1,
        bits_scaled_norm=scaled.norm().bit_length() - 1,
    )


def bench_strategies(source: MatrixSource, strategies=None,
                     cfg: StrategyConfig | None = None) -> list[BenchRecord]:
    """Run the requested strategies on one matrix, one record per strategy.

    A strategy failure produces a record with primes = -1 rather than
    aborting the sweep.
    """
    cfg = cfg or StrategyConfig()
    names = list(strategies) if strategies else list(STRATEGIES)
    matrix = source.load()
    _, profile = best_denominator_profile(matrix)
    records = []
    for name in names:
        runner = STRATEGIES[name]
        t0 = time.perf_counter()
        try:
            result = runner(matrix, cfg)
        except Exception:
            records.append(BenchRecord(source.matrix_id(), matrix.dim, name,
                                       (time.perf_counter() - t0) * 1e3,
                                       -1, 0, 0, 0, 0.0))
            continue
        wall = (time.perf_counter() - t0) * 1e3
        n, d = result.value.numerator, result.value.denominator
        records.append(BenchRecord(
            matrix_id=source.matrix_id(),
            m=matrix.dim,
            strategy=name,
            wall_ms=wall,
            primes=result.primes_used,
            bits_n=abs(n).bit_length(),
            bits_d=d.bit_length(),
            bits_D=profile.product.bit_length(),
            overapprox_ratio=overapprox_ratio(profile.product, d),
        ))
    return records


def write_strategy_csv(records, path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(STRATEGY_CSV_COLUMNS)
        for r in records:
            writer.writerow([r.matrix_id, r.m, r.strategy, f"{r.wall_ms:.3f}", r.primes,
                             r.bits_n, r.bits_d, r.bits_D, f"{r.overapprox_ratio:.6f}"])


def write_imaging_csv(records, path: str) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(IMAGING_CSV_COLUMNS)
        for r in records:
            structured = "" if r.structured_ms is None else f"{r.structured_ms:.4f}"
            writer.writerow([r.matrix_id, r.m, r.primes, f"{r.rational_ms:.4f}",
                             f"{r.integer_ms:.4f}", structured, f"{r.ratio:.5f}",
                             r.bits_norm, r.bits_scaled_norm])
