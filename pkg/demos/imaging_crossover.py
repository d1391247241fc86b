#!/usr/bin/env python3
"""Where does integer imaging beat rational imaging, and vice versa?

Reducing a matrix mod p is the per-prime toll of every CRT strategy.  For a
rational matrix each entry costs two reductions and a modular inverse; for
the row-scaled integer matrix it costs one reduction of a possibly huge
integer.  Small scaled entries (random decimals) favor the integer route;
entries that blow up under scaling (Hilbert) favor the rational route.
The ratio column is rational_ms / integer_ms: > 1 means integer wins.
"""

from ratdet import MatrixSource
from ratdet.bench import bench_imaging


def sweep(sources, primes=3):
    print(f"{'matrix':<14} {'rat ms':>9} {'int ms':>9} {'ratio':>7} "
          f"{'log2|A|':>8} {'log2|At|':>9}")
    for source in sources:
        rec = bench_imaging(source, primes=primes, seed=42)
        print(f"{rec.matrix_id:<14} {rec.rational_ms / rec.primes:9.3f} "
              f"{rec.integer_ms / rec.primes:9.3f} {rec.ratio:7.3f} "
              f"{rec.bits_norm:8d} {rec.bits_scaled_norm:9d}")


def main():
    print("Random decimal matrices: scaled entries stay word-size, integer wins")
    sweep([MatrixSource("random_decimal", m=m, places=6, seed=m) for m in (50, 100, 200)])

    print("\nHilbert matrices: scaled entries grow like lcm(1..2m), rational")
    print("imaging takes over somewhere below m = 400")
    sweep([MatrixSource("hilbert", m=m) for m in (100, 200, 300, 400)])

    print("\nHankel structure: only 2m-1 distinct entries need images at all")
    rec = bench_imaging(MatrixSource("hilbert", m=400, structured=True), primes=3, seed=42)
    dense = rec.rational_ms / rec.primes
    structured = rec.structured_ms / rec.primes
    print(f"hilbert400 dense: {dense:.2f} ms/prime, structured: {structured:.3f} ms/prime "
          f"-> {dense / structured:.0f}x cheaper")


if __name__ == "__main__":
    main()
