#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the grid transform and the marker blend on identical inputs and checks
that both lanes return bit-identical results while timing them.

    python benchmarks/bench_kernels.py [--step 0.05] [--repeat 3]
"""

import argparse
import math
import time

import numpy as np

from pointforge import Rng, generate_equation
from pointforge.equations import compile_equation
from pointforge.generator import axis_points
from pointforge.kernel import pure
from pointforge.rendering import MarkerKind, _marker_mask

try:
    from pointforge.kernel import _native
except ImportError:
    _native = None


def time_best(fn, repeat):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_transform(step: float, repeat: int):
    rng = Rng("bench")
    p1 = compile_equation(generate_equation(rng))
    p2 = compile_equation(generate_equation(rng))
    axis = axis_points(-math.pi, math.pi, step)
    words = Rng("bench-points").state_words()
    n = len(axis) ** 2

    rows = []
    t_pure, out_pure = time_best(
        lambda: pure.transform_grid(axis, p1, p2, 0, words), repeat
    )
    rows.append(("transform", "pure", n, t_pure))
    if _native is not None:
        t_nat, out_nat = time_best(
            lambda: _native.transform_grid(axis, p1, p2, 0, words), repeat
        )
        rows.append(("transform", "native", n, t_nat))
        assert all(
            np.array_equal(a, b) for a, b in zip(out_pure[:3], out_nat[:3])
        ), "lanes disagree"
    return rows


def bench_blend(repeat: int):
    rng = np.random.default_rng(1)
    n = 50_000
    h = w = 400
    px = rng.integers(0, w, n).astype(np.int64)
    py = rng.integers(0, h, n).astype(np.int64)
    colors = np.column_stack(
        [rng.uniform(0, 255, n)] * 3 + [rng.uniform(0, 1, n)]
    ).astype(np.float64)
    offsets, coverage = _marker_mask(MarkerKind.POINT, 2.0, 1.0)

    rows = []

    def run(impl):
        canvas = np.zeros((h, w, 3), dtype=np.float64)
        impl.blend_markers(canvas, px, py, offsets, coverage, colors)
        return canvas

    t_pure, c_pure = time_best(lambda: run(pure), repeat)
    rows.append(("blend", "pure", n, t_pure))
    if _native is not None:
        t_nat, c_nat = time_best(lambda: run(_native), repeat)
        rows.append(("blend", "native", n, t_nat))
        assert np.array_equal(c_pure, c_nat), "lanes disagree"
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--step", type=float, default=0.05, help="grid step for transform")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows = bench_transform(args.step, args.repeat) + bench_blend(args.repeat)

    print(f"{'kernel':<12}{'lane':<10}{'items':>10}{'best (s)':>12}{'items/s':>14}")
    by_kernel = {}
    for kernel, lane, n, t in rows:
        print(f"{kernel:<12}{lane:<10}{n:>10}{t:>12.4f}{n / t:>14.0f}")
        by_kernel.setdefault(kernel, {})[lane] = t
    for kernel, lanes in by_kernel.items():
        if "native" in lanes and "pure" in lanes:
            print(f"{kernel}: native is {lanes['pure'] / lanes['native']:.1f}x faster")


if __name__ == "__main__":
    main()
