#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Kernel-level rows time both implementations in-process on identical
inputs (dense series with genuinely large integer coefficients, plus
the mod-7 lane used by the scanner).  The end-to-end row re-runs a full
congruence verification in a subprocess per backend, since backend
selection happens at import time.

Usage: python benchmarks/compare_backends.py [--quick]
"""

import os
import subprocess
import sys
import time

from qpart import _kernels_py
from qpart.etaq import pochhammer_f

try:
    from qpart import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeats=3):
    best = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    return best


def dense_input(order):
    # partition-number growth: dense and arbitrarily large coefficients
    return _kernels_py.inv(list(pochhammer_f(1, order)), order)


def kernel_rows(orders):
    for order in orders:
        dense = dense_input(order)
        sparse = list(pochhammer_f(1, order))
        cases = [
            ("exact mul (dense x dense)", lambda k: k.mul(dense, dense, order)),
            ("exact inverse (sparse)", lambda k: k.inv(sparse, order)),
            ("mod-7 mul (dense x dense)", lambda k: k.mul_mod(dense, dense, order, 7)),
            ("mod-7 inverse (dense)", lambda k: k.inv_mod(dense, order, 7)),
        ]
        for name, call in cases:
            t_py = best_of(lambda: call(_kernels_py))
            t_c = best_of(lambda: call(_kernels)) if _kernels else None
            yield name, order, t_py, t_c


def end_to_end(backend):
    env = dict(os.environ, QPART_BACKEND=backend)
    code = ("import time, qpart\n"
            "t0 = time.perf_counter()\n"
            "assert all(r.holds for r in qpart.verify_mod7_family(200))\n"
            "print(time.perf_counter() - t0)\n")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main():
    quick = "--quick" in sys.argv
    orders = (256, 512) if quick else (512, 1024, 2048)

    print(f"compiled kernels available: {_kernels is not None}")
    header = f"{'operation':<28} {'order':>6} {'python':>10} {'c':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, order, t_py, t_c in kernel_rows(orders):
        c_col = f"{t_c:9.4f}s" if t_c is not None else "       --"
        ratio = f"{t_py / t_c:7.1f}x" if t_c else "      --"
        print(f"{name:<28} {order:>6} {t_py:9.4f}s {c_col} {ratio}")

    if _kernels is not None:
        upto = "five mod-7 rows, n < 200"
        t_py = end_to_end("python")
        t_c = end_to_end("c")
        print("-" * len(header))
        print(f"{'end-to-end: ' + upto:<35} {t_py:9.4f}s {t_c:9.4f}s "
              f"{t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
