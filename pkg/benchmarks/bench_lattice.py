"""Time the two lattice-sum backends and check that they agree.

    python3 benchmarks/bench_lattice.py --points 200 --radius 60
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from galoislines.analytic import lattice_sums
from galoislines.analytic.kernels import NUMBA_AVAILABLE


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200)
    ap.add_argument("--radius", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    z = rng.uniform(0.05, 0.95, args.points) + 1j * rng.uniform(0.05, 0.95, args.points)

    t_np, (a2, a3) = _time(lambda: lattice_sums(z, args.radius, "numpy"), args.repeat)
    print(f"numpy  {args.points} points, radius {args.radius}: {t_np * 1e3:9.2f} ms")
    if not NUMBA_AVAILABLE:
        print("numba  not importable, skipped")
        return 0
    lattice_sums(z[:1], 2, "numba")  # compile outside the timing
    t_nb, (b2, b3) = _time(lambda: lattice_sums(z, args.radius, "numba"), args.repeat)
    print(f"numba  {args.points} points, radius {args.radius}: {t_nb * 1e3:9.2f} ms"
          f"  (x{t_np / t_nb:.1f})")
    diff = max(np.max(np.abs(a2 - b2) / np.abs(a2)), np.max(np.abs(a3 - b3) / np.abs(a3)))
    print(f"max relative disagreement {diff:.2e}")
    return 0 if diff < 1e-12 else 1


if __name__ == "__main__":
    raise SystemExit(main())
