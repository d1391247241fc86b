"""Command line front end.

    ratdet det --gen hilbert:20 --strategy adaptive
    ratdet det --input matrix.mtx --strategy precdet --certify
    ratdet bench imaging --gen hilbert:400 --structured --csv out.csv
    ratdet bench strategies --gen random:50,6 --csv out.csv
    ratdet oracle --gen hilbert:12

`det` prints the determinant numerator and denominator as decimal strings on
two lines; run statistics go to stderr.  RATDET_SEED provides the default
seed.
"""

import argparse
import os
import sys

from .bareiss import exact_rational_determinant
from .bench import (
    bench_imaging,
    bench_strategies,
    write_imaging_csv,
    write_strategy_csv,
)
from .generators import MatrixSource, approximate_entries, hilbert_det_closed_form
from .matrixmarket import ParseError
from .strategies import STRATEGIES, StrategyConfig


def _default_seed() -> int | None:
    raw = os.environ.get("RATDET_SEED")
    return int(raw) if raw else None


def _add_source_args(parser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--input", metavar="PATH", help="Matrix Market file")
    group.add_argument("--gen", metavar="SPEC",
                       help="generator: hilbert:M | random:M[,PLACES] | rational:M[,MAXDEN]")
    parser.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: RATDET_SEED env var)")
    parser.add_argument("--structured", action="store_true",
                        help="keep Hankel structure of hilbert matrices for imaging")
    parser.add_argument("--cf-approx", type=int, metavar="BOUND", default=None,
                        help="replace entries by best approximations with denominator <= BOUND")


def _resolve_source(args) -> MatrixSource:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.input:
        return MatrixSource("file", path=args.input)
    return MatrixSource.from_spec(args.gen, seed=seed, structured=args.structured)


def _load_matrix(args):
    matrix = _resolve_source(args).load()
    if args.cf_approx is not None:
        matrix = approximate_entries(matrix, args.cf_approx)
    return matrix


def _print_int(value: int, digits: int | None) -> None:
    text = str(value)
    if digits is not None and len(text) > digits:
        text = f"{text[:digits]}...({len(text)} digits)"
    print(text)


def _cmd_det(args) -> int:
    matrix = _load_matrix(args)
    cfg = StrategyConfig(
        prime_bits=args.prime_bits,
        et_threshold=args.et,
        seed=args.seed if args.seed is not None else _default_seed(),
        force_bound_run=args.certify,
    )
    result = STRATEGIES[args.strategy](matrix, cfg)
    _print_int(result.value.numerator, args.digits)
    _print_int(result.value.denominator, args.digits)
    print(
        f"strategy={result.strategy} primes={result.primes_used} "
        f"ratrec_attempts={result.ratrec_attempts} early_termination={result.et_triggered} "
        f"total_ms={result.wall_times.get('total', 0.0) * 1e3:.1f}",
        file=sys.stderr,
    )
    return 0


def _cmd_oracle(args) -> int:
    source = _resolve_source(args)
    if source.kind == "hilbert":
        value = hilbert_det_closed_form(source.m)
    else:
        value = exact_rational_determinant(_load_matrix(args))
    _print_int(value.numerator, args.digits)
    _print_int(value.denominator, args.digits)
    return 0


def _cmd_bench(args) -> int:
    source = _resolve_source(args)
    if args.what == "imaging":
        record = bench_imaging(source, primes=args.primes, prime_bits=args.prime_bits,
                               seed=args.seed if args.seed is not None else _default_seed())
        print(f"{record.matrix_id}: rational {record.rational_ms:.3f} ms, "
              f"integer {record.integer_ms:.3f} ms over {record.primes} primes "
              f"(ratio {record.ratio:.3f}; log2 norms {record.bits_norm}/{record.bits_scaled_norm})")
        if record.structured_ms is not None:
            print(f"  structured imaging: {record.structured_ms:.3f} ms "
                  f"({record.rational_ms / record.structured_ms:.1f}x faster than dense)")
        if args.csv:
            write_imaging_csv([record], args.csv)
        return 0

    names = args.strategies.split(",") if args.strategies else None
    if names:
        unknown = [n for n in names if n not in STRATEGIES]
        if unknown:
            raise ValueError(f"unknown strategies: {', '.join(unknown)}")
    cfg = StrategyConfig(prime_bits=args.prime_bits, et_threshold=args.et,
                         seed=args.seed if args.seed is not None else _default_seed(),
                         force_bound_run=args.certify)
    records = bench_strategies(source, names, cfg)
    for r in records:
        print(f"{r.matrix_id} {r.strategy}: {r.wall_ms:.1f} ms, primes={r.primes}, "
              f"bits(n)={r.bits_n} bits(d)={r.bits_d} bits(D)={r.bits_D} "
              f"overapprox={r.overapprox_ratio:.4f}")
    if args.csv:
        write_strategy_csv(records, args.csv)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ratdet",
                                     description="exact determinants of rational matrices")
    sub = parser.add_subparsers(dest="command", required=True)

    det = sub.add_parser("det", help="compute a determinant")
    _add_source_args(det)
    det.add_argument("--strategy", choices=sorted(STRATEGIES), default="adaptive")
    det.add_argument("--prime-bits", type=int, default=26)
    det.add_argument("--et", type=int, default=2, help="early-termination threshold")
    det.add_argument("--certify", action="store_true",
                     help="disable early termination; run out the certified bound")
    det.add_argument("--digits", type=int, default=None,
                     help="truncate printed integers to this many digits")
    det.set_defaults(func=_cmd_det)

    bench = sub.add_parser("bench", help="benchmark imaging or strategies")
    bench.add_argument("what", choices=["imaging", "strategies"])
    _add_source_args(bench)
    bench.add_argument("--primes", type=int, default=5, help="primes per imaging benchmark")
    bench.add_argument("--prime-bits", type=int, default=26)
    bench.add_argument("--et", type=int, default=2)
    bench.add_argument("--certify", action="store_true")
    bench.add_argument("--strategies", default=None,
                       help="comma-separated strategy subset (default: all)")
    bench.add_argument("--csv", metavar="PATH", default=None)
    bench.set_defaults(func=_cmd_bench)

    oracle = sub.add_parser("oracle", help="closed-form or elimination reference value")
    _add_source_args(oracle)
    oracle.add_argument("--digits", type=int, default=None)
    oracle.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, OSError) as exc:
        print(f"ratdet: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
