"""Compare the compiled and pure-Python sweep kernels.

Runs the structured solver on randomly generated problems with each available
backend and prints a CSV: backend, n, median_ms, sweeps.

Usage:
    python3 benchmarks/kernel_benchmark.py [--sizes 10,50,100,200] [--reps 21] [--seed 0]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from beamlcp import PgsOptions, available_backends, solve_structured
from beamlcp.generate import gen_contact


def run(sizes: list[int], reps: int, seed: int) -> None:
    print("backend,n,median_ms,sweeps")
    for n in sizes:
        rng = np.random.default_rng(seed)
        c = gen_contact(n, rng)
        for backend in available_backends():
            options = PgsOptions(backend=backend)
            sol = solve_structured(c, options)  # warm-up and sweep count
            times = []
            for _ in range(reps):
                start = time.perf_counter()
                solve_structured(c, options)
                times.append(time.perf_counter() - start)
            median_ms = 1e3 * float(np.median(times))
            print(f"{backend},{n},{median_ms:.4f},{sol.sweeps}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--sizes",
        default="10,50,100,200",
        help="comma-separated problem sizes (default: 10,50,100,200)",
    )
    parser.add_argument("--reps", type=int, default=21, help="timed repetitions per case")
    parser.add_argument("--seed", type=int, default=0, help="generator seed")
    args = parser.parse_args()
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    run(sizes, args.reps, args.seed)


if __name__ == "__main__":
    main()
