"""Compare the pure-Python and compiled solver backends.

Runs identical decision workloads through both kernels and prints a
table of wall times. The two backends implement the same decision
procedure assignment for assignment, so the outputs must match; this
script asserts that while timing.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hexcrc import kernels
from hexcrc.arrays import parse
from hexcrc.search import refutation_radius, solve_torus

WORKLOADS = [
    ("ribbon unsat 2x28", lambda: solve_torus(parse("[03-111-12]"), 2, 28)),
    ("torus unsat 4x14", lambda: solve_torus(parse("[03-111-12]"), 4, 14)),
    ("torus sat 14x14", lambda: solve_torus(parse("[03-111-12]"), 14, 14)),
    ("torus sat 14x14 alt", lambda: solve_torus(parse("[12-102-12]"), 14, 14)),
    ("deep refutation", lambda: refutation_radius(parse("[03-102-111-21]"))),
]


def run(repeat: int) -> int:
    backends = kernels.available_backends()
    results: dict[str, dict[str, float]] = {}
    outputs: dict[str, dict[str, object]] = {}
    for backend in backends:
        kernels.set_backend(backend)
        for name, work in WORKLOADS:
            best = float("inf")
            out = None
            for _ in range(repeat):
                t0 = time.perf_counter()
                out = work()
                best = min(best, time.perf_counter() - t0)
            results.setdefault(name, {})[backend] = best
            outputs.setdefault(name, {})[backend] = out

    mismatch = False
    for name, by_backend in outputs.items():
        values = list(by_backend.values())
        if any(v != values[0] for v in values[1:]):
            print(f"MISMATCH on {name}: {by_backend}", file=sys.stderr)
            mismatch = True

    both = "python" in backends and "compiled" in backends
    width = max(len(name) for name, _ in WORKLOADS)
    header = f"{'workload':<{width}}" + "".join(f"  {b:>10}" for b in backends)
    if both:
        header += f"  {'speedup':>8}"
    print(header)
    for name, _ in WORKLOADS:
        row = f"{name:<{width}}"
        for b in backends:
            row += f"  {results[name][b] * 1000:>8.1f}ms"
        if both and results[name]["compiled"] > 0:
            ratio = results[name]["python"] / results[name]["compiled"]
            row += f"  {ratio:>7.1f}x"
        print(row)
    if len(backends) == 1:
        print("note: compiled backend unavailable, timed pure python only")
    return 1 if mismatch else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=1)
    args = ap.parse_args()
    return run(args.repeat)


if __name__ == "__main__":
    sys.exit(main())
