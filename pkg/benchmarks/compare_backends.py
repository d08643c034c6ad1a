#!/usr/bin/env python3
"""Benchmark the JIT kernels against the interpreted / numpy fallbacks.

The package selects its backend once at import via QCLC_BACKEND, so this
script runs each measurement in a fresh subprocess: once with the numba
backend, once with the pure-Python/numpy path.

Usage: python benchmarks/compare_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys

CASES = {
    "bfs_girth": """
import time
from qclc.search import CompactSpec, build_compact
from qclc.tanner import TannerGraph, bfs_girth
graph = TannerGraph.from_exponent(build_compact(CompactSpec((0,1,3), (0,1,2,4,7,8,9,11,14,22,25,31,40), 43)))
bfs_girth(graph)  # warm-up/compile
t0 = time.perf_counter()
for _ in range(REPEAT):
    assert bfs_girth(graph) == 6
print((time.perf_counter() - t0) / REPEAT)
""",
    "min_distance_enumerate": """
import time
from qclc.matrices import lift
from qclc.search import CompactSpec, build_compact
from qclc.trapping import min_distance
h = lift(build_compact(CompactSpec((0,1,3), (0,1,2,4,7), 11)))
min_distance(h, strategy="enumerate")  # warm-up/compile
t0 = time.perf_counter()
for _ in range(REPEAT):
    assert min_distance(h, strategy="enumerate").value == 10
print((time.perf_counter() - t0) / REPEAT)
""",
    "even_subgraph_search": """
import time
from qclc.matrices import lift
from qclc.search import CompactSpec, build_compact
from qclc.trapping import min_distance
h = lift(build_compact(CompactSpec((0,1,4), (0,1,2,3,5,8), 13)))
min_distance(h, strategy="even-subgraph", limit=5)  # warm-up/compile
t0 = time.perf_counter()
for _ in range(REPEAT):
    assert min_distance(h, strategy="even-subgraph", limit=5).value is None
print((time.perf_counter() - t0) / REPEAT)
""",
    "ets_enumeration": """
import time
from qclc.search import CompactSpec, build_compact
from qclc.tanner import TannerGraph
from qclc.trapping import enumerate_ets
graph = TannerGraph.from_exponent(build_compact(CompactSpec((0,1,3), (0,1,2,4,7), 11)))
enumerate_ets(graph, 5, b_max=2)  # warm-up/compile
t0 = time.perf_counter()
for _ in range(REPEAT):
    assert enumerate_ets(graph, 6, b_max=3) != None
print((time.perf_counter() - t0) / REPEAT)
""",
}


def run_case(name: str, backend: str, repeat: int) -> float:
    env = dict(os.environ, QCLC_BACKEND=backend)
    code = f"REPEAT = {repeat}\n" + CASES[name]
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    return float(out.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--json", default=None)
    args = parser.parse_args()
    results = {}
    print(f"{'kernel':28} {'numba':>12} {'python':>12} {'speedup':>9}")
    for name in CASES:
        fast = run_case(name, "numba", args.repeat)
        slow = run_case(name, "python", args.repeat)
        results[name] = {"numba_s": fast, "python_s": slow}
        print(f"{name:28} {fast:>11.4f}s {slow:>11.4f}s {slow / fast:>8.1f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
