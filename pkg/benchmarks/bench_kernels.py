#!/usr/bin/env python3
"""Time the numba and numpy kernel backends on the same inputs.

    python3 benchmarks/bench_kernels.py --repeat 3
"""

import argparse
import time

from braidcohom import _kernels
from braidcohom.character_oracle import _kernel_args, delta_of, double_coset_reps
from braidcohom.combinatorics import Partition


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def indicator_cases():
    # (n, q, partition): the largest centralizers the oracle meets at n = 10
    yield 10, 5, Partition((1,) * 10)
    yield 10, 4, Partition((2, 2, 2, 1, 1, 1, 1))
    yield 10, 3, Partition((3, 3, 2, 2))
    yield 10, 5, Partition((5, 5))


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--lambda", dest="lams", type=int, nargs="*", default=[16, 20, 22])
    args = ap.parse_args()

    backends = {name: _kernels.load_backend(name) for name in _kernels.BACKENDS}
    # compile once so the numba column measures steady state
    backends["numba"].necklace_scan(4)

    print(f"{'kernel':<40}{'numba s':>12}{'numpy s':>12}{'speedup':>10}")
    for lam in args.lams:
        times = {}
        results = {}
        for name, mod in backends.items():
            times[name], results[name] = best_of(lambda: mod.necklace_scan(lam), args.repeat)
        same = all((a == b).all() for a, b in zip(results["numba"], results["numpy"]))
        assert same, f"backends disagree on necklace_scan({lam})"
        print(f"{'necklace_scan lambda=' + str(lam):<40}{times['numba']:>12.4f}{times['numpy']:>12.4f}"
              f"{times['numpy'] / times['numba']:>10.1f}")

    for n, q, partition in indicator_cases():
        s = double_coset_reps(n, q, partition)[0]
        kargs = _kernel_args(partition, delta_of(s, q))
        times = {}
        results = {}
        for name, mod in backends.items():
            mod.centralizer_indicator(*kargs, False)
            times[name], results[name] = best_of(lambda: mod.centralizer_indicator(*kargs, False), args.repeat)
        assert results["numba"] == results["numpy"], f"backends disagree on {partition}"
        label = f"indicator {partition} q={q}"
        print(f"{label:<40}{times['numba']:>12.4f}{times['numpy']:>12.4f}"
              f"{times['numpy'] / times['numba']:>10.1f}")


if __name__ == "__main__":
    main()
