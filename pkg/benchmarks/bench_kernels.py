"""Compare the compiled and numpy backends on the hot loops.

Usage: python3 benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import math
import timeit

import numpy as np

import trigapprox
from trigapprox import (
    fourier_lagrange_coeffs,
    make_psi,
    pointwise_error_general,
    pointwise_error_interp,
    validate_multipliers,
)


def cases():
    rng = np.random.default_rng(0)
    samples = rng.standard_normal(2 * 400 + 1)
    a, b = rng.standard_normal(2000), rng.standard_normal(2000)
    xs = rng.uniform(0, 2 * math.pi, 200)
    poly = trigapprox.TrigPolynomial(0.0, a, b)
    mults = validate_multipliers([1, 0.5, 0.2, -0.3], [0, 0.3, -0.1, 0.2], 3)
    slow = make_psi("power", 0.75)
    fast = make_psi("power", 2.0)
    return {
        "dft n=400": lambda: fourier_lagrange_coeffs(samples, 400),
        "trig_eval deg=2000 x200": lambda: poly(xs),
        "interp series r=0.75 near node": lambda: pointwise_error_interp(slow, 1, 1e-3, tol=1e-12),
        "general series r=2 blocks=2^18": lambda: pointwise_error_general(fast, mults, 0.9,
                                                                          blocks=1 << 18),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    backends = trigapprox.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the numpy backend is available")
    results = {}
    for name in backends:
        prev = trigapprox.use_backend(name)
        try:
            for label, fn in cases().items():
                fn()  # warm up
                t = min(timeit.repeat(fn, number=1, repeat=args.repeat))
                results[(label, name)] = t
        finally:
            trigapprox.use_backend(prev)

    width = max(len(label) for label, _ in results)
    header = f"{'case':<{width}}  " + "  ".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += "  speed-up"
    print(header)
    for label in cases():
        row = f"{label:<{width}}  " + "  ".join(
            f"{results[(label, b)] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f"  {results[(label, 'python')] / results[(label, 'compiled')]:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
