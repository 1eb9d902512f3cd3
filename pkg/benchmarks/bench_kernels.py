"""Benchmark the contraction kernels: numba against the numpy fallback.

The flag DIAGRAMMAR_NUMBA is read once at import, so each backend runs in
a fresh subprocess. Workloads are the two shapes the package actually
produces: chained Real matrix contractions (pregroup sentence evaluation)
and Bool relational composition (database queries). Run from the repo
root:

    python3 benchmarks/bench_kernels.py
"""

import json
import os
import subprocess
import sys

WORKER = r"""
import json
import sys
import time

import numpy as np

from diagrammar import _kernels

rng = np.random.default_rng(0)
sizes = [16, 64, 128]
repeats = 30
results = {"backend": _kernels.backend_in_use()}

for n in sizes:
    a = rng.random((n, n))
    b = rng.random((n, n))
    _kernels.matmul(a, b, "Real")  # warm-up pays any jit cost up front
    t0 = time.perf_counter()
    for _ in range(repeats):
        out = a
        for _ in range(8):
            out = _kernels.matmul(out, b, "Real")
    results["real_{}".format(n)] = (time.perf_counter() - t0) / repeats

    for density, label in [(0.05, "sparse"), (0.5, "dense")]:
        p = rng.random((n, n)) < density
        q = rng.random((n, n)) < density
        _kernels.matmul(p, q, "Bool")
        t0 = time.perf_counter()
        for _ in range(repeats):
            out = p
            for _ in range(8):
                out = _kernels.matmul(out, q, "Bool")
        results["bool_{}_{}".format(label, n)] = \
            (time.perf_counter() - t0) / repeats

a = rng.random((8, 8, 8, 8))
b = rng.random((8, 8, 8, 8))
_kernels.contract(a, b, 2, "Real")
t0 = time.perf_counter()
for _ in range(200):
    _kernels.contract(a, b, 2, "Real")
results["contract_8x4d"] = (time.perf_counter() - t0) / 200

json.dump(results, sys.stdout)
"""


def run_backend(flag):
    env = dict(os.environ, DIAGRAMMAR_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", WORKER], env=env,
                         capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    numpy_times = run_backend("0")
    numba_times = run_backend("1")
    print("backends: {} vs {}".format(
        numpy_times.pop("backend"), numba_times.pop("backend")))
    print("{:<16}{:>12}{:>12}{:>9}".format(
        "workload", "numpy (s)", "numba (s)", "speedup"))
    for key in sorted(numpy_times):
        base, jit = numpy_times[key], numba_times[key]
        print("{:<16}{:>12.6f}{:>12.6f}{:>8.2f}x".format(
            key, base, jit, base / jit if jit else float("inf")))


if __name__ == "__main__":
    main()
