#!/usr/bin/env python3
"""Median planning time per graph size, for eyeballing the growth rate.

Usage: python scripts/timing.py [--sizes 25,50,100,200] [--per-size 7]
"""

from __future__ import annotations

import argparse
import pathlib
import statistics
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from lplan.oracle import GenSpec, GenerationFailed, generate_ptpg
from lplan.pipeline import plan


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="25,50,100,200")
    ap.add_argument("--per-size", type=int, default=7)
    ap.add_argument("--seed-base", type=int, default=400)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    print(f"{'n':>5} {'plans':>5} {'median':>9} {'worst':>9} {'t/n^2':>11}")
    for n in sizes:
        times: list[float] = []
        seed = args.seed_base
        while len(times) < args.per_size and seed < args.seed_base + 200:
            try:
                g = generate_ptpg(GenSpec(n=n, seed=seed))
            except GenerationFailed:
                seed += 1
                continue
            seed += 1
            t0 = time.perf_counter()
            res = plan(g)
            dt = time.perf_counter() - t0
            if res.ok:
                times.append(dt)
        med = statistics.median(times)
        print(
            f"{n:>5} {len(times):>5} {med * 1e3:>7.1f}ms {max(times) * 1e3:>7.1f}ms "
            f"{med / (n * n):>11.2e}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
