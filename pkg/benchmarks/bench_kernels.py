#!/usr/bin/env python3
"""Time the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import timeit

import numpy as np

from arscope import _pykernels

try:
    from arscope import _kernels
except ImportError:
    _kernels = None


def cases():
    rng = np.random.default_rng(0)
    phi = np.array([0.25, 0.5])
    eps = rng.standard_normal(1500)
    x = rng.standard_normal(500)
    d = x - x.mean()
    r = _pykernels.lag_products(d, 25)
    r = r / r[0]
    return {
        "ar_filter (n=1500, p=2)": lambda k: k.ar_filter(eps, phi),
        "ar_residuals (n=500, p=2)": lambda k: k.ar_residuals(x, phi),
        "lag_products (n=500, K=25)": lambda k: k.lag_products(d, 25),
        "levinson (K=25)": lambda k: k.levinson(r, 25),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()

    print(f"{'kernel':30s} {'python us':>12s} {'cython us':>12s} {'speedup':>9s}")
    for name, fn in cases().items():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=args.repeat, repeat=3)) / args.repeat * 1e6
        if _kernels is None:
            print(f"{name:30s} {py:12.1f} {'n/a':>12s} {'':>9s}")
            continue
        cy = min(timeit.repeat(lambda: fn(_kernels), number=args.repeat, repeat=3)) / args.repeat * 1e6
        print(f"{name:30s} {py:12.1f} {cy:12.1f} {py / cy:8.1f}x")


if __name__ == "__main__":
    main()
