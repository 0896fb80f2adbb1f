#!/usr/bin/env python3
"""Benchmark the compiled Jacobi kernel against the pure NumPy fallback.

Times full Hermitian eigendecompositions across matrix sizes and reports
the per-call cost of each backend plus the speedup.  Run from the repo
root after installing the package:

    python benchmarks/bench_eig.py [--sizes 2,4,8,16,32,64] [--repeats 50]
"""

import argparse
import time

import numpy as np

from nltrace import config
from nltrace._kernels import _jacobi_py

try:
    from nltrace._kernels import _jacobi as _compiled
except ImportError:
    _compiled = None


def random_hermitian(n, rng):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return 0.5 * (g + g.conj().T)


def time_backend(kernel, matrices, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for a in matrices:
            off_tol = config.EIG_OFF_TOL * (1.0 + np.linalg.norm(a, "fro"))
            w, v, sweeps, ok = kernel(a.copy(), off_tol, config.EIG_MAX_SWEEPS)
            assert ok
        best = min(best, (time.perf_counter() - start) / len(matrices))
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="2,4,8,16,32,64")
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--batch", type=int, default=20, help="matrices per size")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(args.seed)

    if _compiled is None:
        print("compiled kernel unavailable; timing the fallback only\n")

    header = f"{'n':>4} {'python (ms)':>14}"
    if _compiled is not None:
        header += f" {'cython (ms)':>14} {'speedup':>9}"
    print(header)
    for n in sizes:
        matrices = [random_hermitian(n, rng) for _ in range(args.batch)]
        repeats = max(1, args.repeats // max(1, n // 8))
        t_py = time_backend(_jacobi_py.jacobi_eigh, matrices, repeats)
        row = f"{n:>4} {t_py * 1e3:>14.4f}"
        if _compiled is not None:
            t_cy = time_backend(_compiled.jacobi_eigh, matrices, repeats)
            row += f" {t_cy * 1e3:>14.4f} {t_py / t_cy:>8.1f}x"
        print(row)

    # Agreement spot check between the two backends.
    if _compiled is not None:
        a = random_hermitian(12, rng)
        off_tol = config.EIG_OFF_TOL * (1.0 + np.linalg.norm(a, "fro"))
        w1, _, _, _ = _jacobi_py.jacobi_eigh(a.copy(), off_tol, config.EIG_MAX_SWEEPS)
        w2, _, _, _ = _compiled.jacobi_eigh(a.copy(), off_tol, config.EIG_MAX_SWEEPS)
        print(
            "\nbackend agreement (n=12): max eigenvalue deviation "
            f"{np.max(np.abs(np.sort(w1) - np.sort(w2))):.3e}"
        )


if __name__ == "__main__":
    main()
