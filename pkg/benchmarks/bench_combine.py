"""Benchmark the combination kernels: compiled extension vs pure Python.

Times ``combine_products`` on randomly generated focal-element lists over a
32-label frame and reports the speedup.  Also asserts that both backends
return bit-identical results, which is the contract the fallback is held to.

Usage::

    python benchmarks/bench_combine.py
    python benchmarks/bench_combine.py --sizes 16 64 256 --repeats 20 --seed 7
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from dsfusion import _kernels_py

try:
    from dsfusion import _kernels
except ImportError:
    _kernels = None

FRAME_BITS = 32


def random_operand(rng: random.Random, n_focals: int) -> tuple[list[int], list[float]]:
    """Random focal-element list: distinct non-empty masks, weights summing to 1."""
    universe = (1 << FRAME_BITS) - 1
    masks = sorted(rng.sample(range(1, universe + 1), n_focals))
    weights = [rng.uniform(0.1, 1.0) for _ in masks]
    total = sum(weights)
    return masks, [w / total for w in weights]


def best_time(func, args: tuple, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        type=int,
        nargs="+",
        default=[8, 32, 128, 512],
        help="focal-element counts per operand (default: 8 32 128 512)",
    )
    parser.add_argument(
        "--repeats", type=int, default=10, help="timing repeats, best-of (default: 10)"
    )
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled extension not available; nothing to compare", file=sys.stderr)
        return 1

    rng = random.Random(args.seed)
    print(f"combine_products, {FRAME_BITS}-label frame, best of {args.repeats}")
    print(f"{'focals':>8} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for size in args.sizes:
        operands = random_operand(rng, size) + random_operand(rng, size)
        result_py = _kernels_py.combine_products(*operands)
        result_c = _kernels.combine_products(*operands)
        if (result_py[0], result_py[1], result_py[2]) != (
            list(result_c[0]),
            list(result_c[1]),
            result_c[2],
        ):
            print(f"backend mismatch at size {size}", file=sys.stderr)
            return 1
        t_py = best_time(_kernels_py.combine_products, operands, args.repeats)
        t_c = best_time(_kernels.combine_products, operands, args.repeats)
        print(f"{size:>8} {t_py * 1e3:>10.3f}ms {t_c * 1e3:>10.3f}ms {t_py / t_c:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
