"""Compiled kernels against the numpy fallback.

Runs each kernel on the same inputs with both backends, reports how far the
outputs differ (largest difference over the largest magnitude) and prints
the best-of-``--repeat`` wall time per call.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--scale 1.0]
"""

from __future__ import annotations

import argparse
import timeit

import numpy as np

from zetaladder import _fallback

try:
    from zetaladder import _kernels
except ImportError:  # extension not built
    _kernels = None


def cases(scale: float):
    x8, w8 = np.polynomial.legendre.leggauss(8)
    x16, _ = np.polynomial.legendre.leggauss(16)
    n = max(1, int(200 * scale))
    t = np.linspace(1e5, 1e5 + 100, max(10, int(20_000 * scale)))
    return [
        ("theta_points", lambda m: m.theta_points(t), f"{t.size} points"),
        ("hardy_z_points t~1e5", lambda m: m.hardy_z_points(t), f"{t.size} points"),
        ("z2_panels t~1e6", lambda m: m.z2_panels(1e6, 0.2, n, x8, w8), f"{n} panels x 8 nodes"),
        ("dirichlet_points", lambda m: m.dirichlet_points(t[:n], 1.5, 20_000), f"{n} points x 20000 terms"),
        ("dirichlet_grid", lambda m: m.dirichlet_grid(1e5, 0.5, n, x16, 1.2, 20_000),
         f"{n} panels x 16 nodes x 20000 terms"),
    ]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--scale", type=float, default=1.0, help="problem-size multiplier")
    args = ap.parse_args()
    if _kernels is None:
        raise SystemExit("compiled extension not built; run `python3 setup.py build_ext --inplace`")

    print(f"{'kernel':24s} {'size':38s} {'numpy':>10s} {'compiled':>10s} {'speedup':>8s} {'max diff/scale':>15s}")
    for name, fn, size in cases(args.scale):
        a = np.asarray(fn(_fallback))
        b = np.asarray(fn(_kernels))
        diff = float(np.max(np.abs(a - b)) / np.max(np.abs(a)))
        tf = min(timeit.repeat(lambda: fn(_fallback), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=args.repeat))
        print(f"{name:24s} {size:38s} {tf * 1e3:8.2f}ms {tc * 1e3:8.2f}ms {tf / tc:7.1f}x {diff:15.2e}")


if __name__ == "__main__":
    main()
