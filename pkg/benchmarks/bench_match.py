"""Time the compiled matching kernel against the pure-Python fallback.

Both kernels run the identical backtracking search and must return the
identical first witness (or None), so the interesting number is the wall
clock.  Three workloads bracket the real usage:

  free   full no-match search for theta6-1 over the k-th member of the
         extremal family -- the freeness certification hot path
  hit    first-witness search for theta6-2 over the same graph -- the
         early-exit path
  small  every catalog graph against both theta-6 patterns, looped --
         the oracle's many-tiny-calls regime

Run from the repository root:

    python3 benchmarks/bench_match.py [--k 1] [--repeat 3] [--loops 200]
"""

from __future__ import annotations

import argparse
import time
from typing import Callable

from triblock import _match_py
from triblock.catalog import CATALOG_LABELS, catalog_graph
from triblock.constructions import build_skeleton, substitute_b5a
from triblock.patterns import THETA6_1, THETA6_2, _order

try:
    from triblock import _match_cy
except ImportError:  # pragma: no cover - extension not built
    _match_cy = None


def _timed(fn: Callable[[], object], repeat: int) -> tuple[float, object]:
    best = float("inf")
    result: object = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, default=1,
                        help="extremal family index (default 1, n=240)")
    parser.add_argument("--repeat", type=int, default=3,
                        help="timing repetitions, best-of (default 3)")
    parser.add_argument("--loops", type=int, default=200,
                        help="iterations of the small-call workload")
    args = parser.parse_args(argv)

    host = substitute_b5a(build_skeleton(args.k)).graph
    host_adj = host.adjacency()
    catalog_adjs = [catalog_graph(label).adjacency() for label in CATALOG_LABELS]
    patterns = []
    for pattern in (THETA6_1, THETA6_2):
        adj = pattern.adjacency()
        patterns.append((adj, _order(adj, ())))

    def workload(kernel):
        def free():
            adj, order = patterns[0]
            return kernel.find_embedding(adj, order, host_adj)

        def hit():
            adj, order = patterns[1]
            return kernel.find_embedding(adj, order, host_adj)

        def small():
            last = None
            for _ in range(args.loops):
                for cat_adj in catalog_adjs:
                    for adj, order in patterns:
                        last = kernel.find_embedding(adj, order, cat_adj)
            return last

        return [("free", free), ("hit", hit), ("small", small)]

    kernels = [("pure", _match_py)]
    if _match_cy is not None:
        kernels.insert(0, ("compiled", _match_cy))
    else:
        print("note: compiled extension not available, timing pure only")

    print(f"host: extremal k={args.k} (n={host.n}, m={host.m}); "
          f"best of {args.repeat}")
    print(f"{'workload':<10}" + "".join(f"{name:>12}" for name, _ in kernels)
          + ("     speedup" if len(kernels) == 2 else ""))
    results: dict[tuple[str, str], object] = {}
    for row in range(3):
        name = workload(_match_py)[row][0]
        times = []
        for kname, kernel in kernels:
            seconds, value = _timed(workload(kernel)[row][1], args.repeat)
            times.append(seconds)
            results[name, kname] = value
        line = f"{name:<10}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2 and times[0] > 0:
            line += f"{times[1] / times[0]:>11.1f}x"
        print(line)

    if _match_cy is not None:
        for name in ("free", "hit", "small"):
            if results[name, "compiled"] != results[name, "pure"]:
                print(f"MISMATCH on {name}: kernels disagree")
                return 1
        print("witness parity: identical results from both kernels")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
