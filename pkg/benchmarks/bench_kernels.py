#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

Runs each hot operation on both backends, checks the results agree, and
prints the speedup.  Usage:

    python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time
from math import gcd

from zeroprod import _kernels_py as kpy

try:
    from zeroprod import _kernels as kc
except ImportError:
    kc = None


def _zero_divisors(n):
    return [x for x in range(1, n) if gcd(x, n) > 1]


CASES = [
    ("gcd_sum(200000)", "gcd_sum", (200_000,)),
    ("ann_size_histogram_zn(65536)", "ann_size_histogram_zn", (65_536,)),
    ("ann_size_histogram_mixed((360, 128))", "ann_size_histogram_mixed", ((360, 128),)),
    ("ann_pair_count_zn(2048)", "ann_pair_count_zn", (2_048,)),
    ("ann_pair_count_mixed((48, 48))", "ann_pair_count_mixed", ((48, 48),)),
    ("graph_edges_zn(4096, Z(4096))", "graph_edges_zn", (4_096, _zero_divisors(4_096))),
    ("mc_zero_pairs_zn(100, 10**6, 12345)", "mc_zero_pairs_zn", (100, 10**6, 12345)),
    ("splitmix64_stream(0, 10**6)", "splitmix64_stream", (0, 10**6)),
]


def best_of(fn, args, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if kc is None:
        print("compiled kernels not built; showing pure-Python timings only")
    header = f"{'operation':<42} {'pure (s)':>10} {'compiled (s)':>13} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, name, call_args in CASES:
        t_py, r_py = best_of(getattr(kpy, name), call_args, args.repeat)
        if kc is None:
            print(f"{label:<42} {t_py:>10.4f} {'-':>13} {'-':>8}")
            continue
        t_c, r_c = best_of(getattr(kc, name), call_args, args.repeat)
        if r_py != r_c:
            raise SystemExit(f"backend mismatch on {label}: {r_py!r} != {r_c!r}")
        print(f"{label:<42} {t_py:>10.4f} {t_c:>13.4f} {t_py / t_c:>7.1f}x")


if __name__ == "__main__":
    main()
