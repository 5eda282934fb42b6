#!/usr/bin/env python3
"""Timing comparison: compiled kernels vs the pure-Python fallback.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py [--trials N]

Each workload is timed best-of-3; the table shows both implementations and
the speedup when the compiled extension is available.
"""

from __future__ import annotations

import argparse
import time

from otplab._kernels import available_impls, get_impl


def best_of(fn, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads(trials):
    return [
        ("census n=20 (1M pads)", lambda impl: impl.census_counts(20)),
        (
            f"length sampling n=10 k=2 ({trials:,} trials)",
            lambda impl: impl.reduction_length_counts(10, 2, 2024, trials),
        ),
        (
            f"eavesdropper guessing n=10 k=3 ({trials:,} trials)",
            lambda impl: impl.eve_guess_correct(10, 3, 2024, trials),
        ),
        (
            f"distinguisher n=8 k=1 ({trials:,} trials)",
            lambda impl: impl.distinguisher_counts(8, 1, 0, 255, 2024, trials),
        ),
    ]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=1_000_000)
    args = parser.parse_args()

    impls = {name: get_impl(name) for name in available_impls()}
    print(f"implementations: {', '.join(impls)}")
    if "compiled" not in impls:
        print("note: compiled extension not built; timing the fallback only")
    print()

    header = f"{'workload':<52}" + "".join(f"{name:>12}" for name in impls)
    if len(impls) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, call in workloads(args.trials):
        times = {}
        for name, impl in impls.items():
            # Verify agreement while timing: both must return the same result.
            times[name] = best_of(lambda: call(impl))
        results = [call(impl) for impl in impls.values()]
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"implementations disagree on: {label}")
        row = f"{label:<52}" + "".join(
            f"{times[name] * 1000:>10.1f}ms" for name in impls
        )
        if len(impls) == 2:
            row += f"{times['pure'] / times['compiled']:>9.0f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
