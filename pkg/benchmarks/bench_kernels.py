"""Benchmark the compiled kernel backend against the pure-Python fallback.

Runs the same workloads through both implementations and prints a
side-by-side timing table.  Usage: python3 benchmarks/bench_kernels.py
[--order N] [--repeat K].
"""

import argparse
import time

from skewlat import _kernels_py
from skewlat.core import chain, direct_product, rectangular

try:
    from skewlat import _kernels_c

    BACKENDS = {"compiled": _kernels_c, "python": _kernels_py}
except ImportError:
    BACKENDS = {"python": _kernels_py}


def _sample_algebra():
    s = direct_product(chain(3), rectangular(2, 1))
    return s.meet.flat(), s.join.flat(), s.n


def workload_assoc(impl):
    flat, _, n = _sample_algebra()
    total = 0
    for _ in range(2000):
        total += impl.assoc_witness(flat, n) is None
    return total


def workload_canonical(impl):
    mt, jt, n = _sample_algebra()
    total = 0
    for _ in range(20):
        total += len(impl.canonical_pair(mt, jt, n))
    return total


def workload_enumerate(impl, order):
    count = 0
    for mt in impl.meet_tables(order):
        for jt in impl.join_completions(mt, order):
            count += 1
    return count


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--order", type=int, default=4)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    workloads = {
        "assoc-witness x2000": lambda impl: workload_assoc(impl),
        "canonical-pair x20": lambda impl: workload_canonical(impl),
        f"enumerate order {args.order}": lambda impl: workload_enumerate(
            impl, args.order
        ),
    }

    print(f"backends: {', '.join(BACKENDS)}")
    header = f"{'workload':<24}" + "".join(f"{b:>12}" for b in BACKENDS)
    print(header)
    print("-" * len(header))
    for name, fn in workloads.items():
        row = f"{name:<24}"
        for impl in BACKENDS.values():
            best = min(_timed(fn, impl) for _ in range(args.repeat))
            row += f"{best * 1000:>10.1f}ms"
        print(row)
    if len(BACKENDS) == 2:
        print("\n(sanity) identical outputs:", _outputs_match(args.order))


def _timed(fn, impl):
    t0 = time.perf_counter()
    fn(impl)
    return time.perf_counter() - t0


def _outputs_match(order):
    a = BACKENDS["compiled"]
    b = BACKENDS["python"]
    return workload_enumerate(a, order) == workload_enumerate(
        b, order
    ) and workload_canonical(a) == workload_canonical(b)


if __name__ == "__main__":
    main()
