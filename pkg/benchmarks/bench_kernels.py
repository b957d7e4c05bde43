"""Compare the compiled term kernels against the pure Python fallback.

Times the raw kernel operations on random sparse operands, then times one
end-to-end construction under each backend (the fallback is selected in a
subprocess via POLYDEGEN_PURE=1).

Usage: python3 benchmarks/bench_kernels.py [--repeat N] [--terms N]
"""

import argparse
import os
import random
import statistics
import subprocess
import sys
import timeit
from fractions import Fraction

from polydegen import _kernels_py

try:
    from polydegen import _kernels
except ImportError:
    _kernels = None


def rand_terms(rng, arity, count):
    out = {}
    while len(out) < count:
        key = tuple(rng.randrange(0, 6) for _ in range(arity + 1))
        out[key] = Fraction(rng.randrange(-99, 100) or 1, rng.randrange(1, 12))
    return out


def time_op(func, repeat):
    times = timeit.repeat(func, number=1, repeat=repeat)
    return min(times), statistics.median(times)


def bench_raw(repeat, count):
    rng = random.Random(42)
    a = rand_terms(rng, 3, count)
    b = rand_terms(rng, 3, count)
    scalar = Fraction(7, 3)
    ops = [
        ("mul_terms", lambda impl: impl.mul_terms(a, b)),
        ("add_terms", lambda impl: impl.add_terms(a, b)),
        ("scale_terms", lambda impl: impl.scale_terms(a, scalar)),
    ]
    print(f"raw kernels on {count}x{count} term operands (best of {repeat}):")
    for name, op in ops:
        pure_best, _ = time_op(lambda: op(_kernels_py), repeat)
        if _kernels is None:
            print(f"  {name:<12} pure {pure_best * 1e3:8.2f} ms   compiled: not built")
            continue
        fast_best, _ = time_op(lambda: op(_kernels), repeat)
        ratio = pure_best / fast_best if fast_best else float("inf")
        print(
            f"  {name:<12} pure {pure_best * 1e3:8.2f} ms   "
            f"compiled {fast_best * 1e3:8.2f} ms   speedup {ratio:4.2f}x"
        )


END_TO_END = (
    "from polydegen import build_family, build_stabilization\n"
    "fam = build_family(2)\n"
    "build_stabilization(fam.delta, fam.h)\n"
)


def bench_end_to_end(repeat):
    print(f"end to end, family and stabilization at l = 2 (best of {repeat}):")
    for label, env_extra in (("compiled", {}), ("pure", {"POLYDEGEN_PURE": "1"})):
        if label == "compiled" and _kernels is None:
            print("  compiled: not built")
            continue
        times = []
        for _ in range(repeat):
            env = dict(os.environ, **env_extra)
            start = timeit.default_timer()
            subprocess.run(
                [sys.executable, "-c", END_TO_END], env=env, check=True
            )
            times.append(timeit.default_timer() - start)
        print(f"  {label:<9} {min(times) * 1e3:8.1f} ms")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--terms", type=int, default=300)
    args = parser.parse_args()
    if _kernels is None:
        print("note: compiled kernel not built, showing pure timings only")
    bench_raw(args.repeat, args.terms)
    bench_end_to_end(min(args.repeat, 3))


if __name__ == "__main__":
    main()
