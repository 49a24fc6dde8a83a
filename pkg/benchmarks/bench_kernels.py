"""Compare the compiled and pure-Python Feynman integral backends.

    python benchmarks/bench_kernels.py [--repeat N]

Times one energy integral, one mass integral, a full minimization and the
51-point comparison scan with each backend.  The minimization and scan
timings swap the backend by patching ``polaron.feynman.feynman_integral``.
"""
import argparse
import statistics
import sys
import time
from unittest import mock

from polaron import feynman, kernels
from polaron.quadrature import DEFAULT_TOLERANCE
from polaron.scan import ScanConfig, run_scan


def best_of(fn, repeat, number):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        for _ in range(number):
            fn()
        times.append((time.perf_counter() - start) / number)
    return min(times), statistics.median(times)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled extension not available; build it with `pip install -e .`", file=sys.stderr)
        return 1

    backends = {"cython": kernels.compiled_feynman_integral, "python": kernels.python_feynman_integral}
    cases = [
        ("energy integral (v=4.03, w=2.14)", 200,
         lambda f: lambda: f(kernels.ENERGY, 4.03, 2.14, DEFAULT_TOLERANCE)),
        ("mass integral (v=4.03, w=2.14)", 200,
         lambda f: lambda: f(kernels.MASS, 4.03, 2.14, DEFAULT_TOLERANCE)),
        ("feynman_minimize(alpha=5)", 3, lambda f: lambda: feynman.feynman_minimize(5.0)),
        ("51-point scan", 1, lambda f: lambda: run_scan(ScanConfig())),
    ]

    print(f"{'case':<34}{'cython':>12}{'python':>12}{'speedup':>10}")
    for name, number, make in cases:
        timing = {}
        for label, fn in backends.items():
            with mock.patch.object(feynman, "feynman_integral", fn):
                timing[label] = best_of(make(fn), args.repeat, number)[0]
        speedup = timing["python"] / timing["cython"]
        print(f"{name:<34}{fmt(timing['cython']):>12}{fmt(timing['python']):>12}{speedup:>9.1f}x")
    return 0


def fmt(seconds):
    if seconds < 1e-3:
        return f"{seconds * 1e6:.1f} us"
    if seconds < 1.0:
        return f"{seconds * 1e3:.1f} ms"
    return f"{seconds:.2f} s"


if __name__ == "__main__":
    sys.exit(main())
