"""Compare the compiled and pure-numpy kernel backends.

Runs each hot kernel on fixed seeded inputs under both settings of
SOBOLEV_BANACH_KERNELS (one subprocess per backend, since the choice is
made at import time) and prints a timing table.

    python3 benchmarks/bench_kernels.py
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _time(fn, *args, repeat=3):
    fn(*args)  # warm-up (JIT compilation on the numba path)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def worker(backend: str) -> None:
    os.environ["SOBOLEV_BANACH_KERNELS"] = backend
    import numpy as np

    from sobolev_banach import _kernels

    rng = np.random.default_rng(0)
    timings = {"backend": _kernels.backend()}

    V = rng.normal(size=(1500, 6))
    P = rng.random(size=(1500, 2))
    w = np.full(6, 1.0 / 6.0)
    timings["holder_max"] = _time(_kernels.holder_max, V, P, 0.5, 2.0, w)

    pts = rng.normal(size=(600, 4))
    D = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
    timings["greedy_radii"] = _time(_kernels.greedy_radii, D)

    X = rng.normal(size=(400_000, 8))
    H = rng.normal(size=(400_000, 8))
    timings["sup_pairing"] = _time(_kernels.sup_pairing, X, H, 1e-12)

    w8 = np.full(8, 1.0 / 8.0)
    timings["lr_pairing_r2"] = _time(_kernels.lr_pairing, X, H, 2.0, w8)
    timings["lr_pairing_r3"] = _time(_kernels.lr_pairing, X, H, 3.0, w8)

    print(json.dumps(timings))


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--worker", choices=["numba", "numpy"], help=argparse.SUPPRESS)
    args = parser.parse_args()
    if args.worker:
        worker(args.worker)
        return 0

    results = {}
    for backend in ("numba", "numpy"):
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--worker", backend],
            capture_output=True,
            text=True,
            check=False,
        )
        if proc.returncode != 0:
            print(f"{backend} worker failed:\n{proc.stderr}", file=sys.stderr)
            return 1
        results[backend] = json.loads(proc.stdout.strip().splitlines()[-1])

    kernels = [k for k in results["numba"] if k != "backend"]
    name_w = max(len(k) for k in kernels)
    print(f"{'kernel':<{name_w}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for k in kernels:
        tn, tp = results["numba"][k], results["numpy"][k]
        print(f"{k:<{name_w}}  {tn * 1e3:>8.2f}ms  {tp * 1e3:>8.2f}ms  {tp / tn:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
