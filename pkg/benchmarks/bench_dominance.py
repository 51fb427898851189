#!/usr/bin/env python3
"""Benchmark the dominance kernel lanes (numba vs pure numpy).

Times the hot witness kernel in isolation and the end-to-end graph build
(outcome codes + kernel + axiom check + maximal set), for a range of
alternative counts. Also reports the n-doubling ratio, which should sit
near 4 for a quadratic kernel.

Usage: python benchmarks/bench_dominance.py [--sizes 250,500,1000] [--m 16]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qualrank import kernels
from qualrank.dominance import _outcome_codes, dominance_graph, maximal_set, prepare
from qualrank.generate import random_problem


def median_time(fn, repeats: int) -> float:
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    times.sort()
    return times[len(times) // 2]


def available_lanes() -> list[str]:
    lanes = ["numpy"]
    try:
        import numba  # noqa: F401

        lanes.insert(0, "numba")
    except ImportError:
        pass
    return lanes


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="250,500,1000", help="comma-separated alternative counts")
    parser.add_argument("--m", type=int, default=16, help="attribute count")
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    lanes = available_lanes()
    rng = np.random.default_rng(args.seed)

    print(f"attribute count m={args.m}, lanes: {', '.join(lanes)}")
    print(f"active lane by environment: {kernels.active_lane()}")
    print()
    header = f"{'n':>6}  {'codes(ms)':>10}" + "".join(
        f"  {lane + ' kernel(ms)':>18}" for lane in lanes
    ) + f"  {'graph e2e(ms)':>14}"
    print(header)

    kernel_times: dict[str, dict[int, float]] = {lane: {} for lane in lanes}
    e2e_times: dict[int, float] = {}
    for n in sizes:
        problem = random_problem(rng, n, args.m, importance="interval")
        prep = prepare(problem)
        codes = _outcome_codes(prep)
        checked = prep.checked_mask_array()
        for lane in lanes:  # warm up jit / page caches
            kernels.witness_masks(codes, checked, lane=lane)
        t_codes = median_time(lambda: _outcome_codes(prep), args.repeats)
        row = f"{n:>6}  {t_codes * 1000:>10.1f}"
        for lane in lanes:
            t = median_time(
                lambda lane=lane: kernels.witness_masks(codes, checked, lane=lane),
                args.repeats,
            )
            kernel_times[lane][n] = t
            row += f"  {t * 1000:>18.1f}"
        t_e2e = median_time(lambda: maximal_set(dominance_graph(problem)), max(3, args.repeats // 2))
        e2e_times[n] = t_e2e
        row += f"  {t_e2e * 1000:>14.1f}"
        print(row)

    print()
    for lane in lanes:
        for small, big in zip(sizes, sizes[1:]):
            if big == small * 2:
                ratio = kernel_times[lane][big] / kernel_times[lane][small]
                print(f"{lane}: kernel time ratio n={small}->{big}: {ratio:.2f}")
    for small, big in zip(sizes, sizes[1:]):
        if big == small * 2:
            print(f"end-to-end graph ratio n={small}->{big}: {e2e_times[big] / e2e_times[small]:.2f}")
    if len(lanes) == 2:
        for n in sizes:
            speedup = kernel_times["numpy"][n] / kernel_times["numba"][n]
            print(f"numba speedup over numpy at n={n}: {speedup:.2f}x")


if __name__ == "__main__":
    main()
