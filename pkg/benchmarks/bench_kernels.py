"""Compiled vs numpy kernels on the oracle workloads.

    python benchmarks/bench_kernels.py [--upto N] [--repeat R]
"""
import argparse
import time

import numpy as np

from zmodn import _kernels_py, kernels, oracle
from zmodn.factor import factorize


def workloads(upto):
    ns = range(2, upto + 1)
    J = {n: max(2, factorize(n).max_exponent) for n in ns}
    masks = {n: oracle.nilpotent_mask(n) for n in ns}
    big = 1 << 20

    def flags(impl):
        for n in ns:
            impl.nilpotent_flags(n, J[n])

    def witness(impl):
        for n in range(upto - 200, upto + 1):
            impl.nilpotent_witness(n, 1, J[n])

    def torsion(impl):
        for n in ns:
            for p, _ in factorize(n):
                impl.torsion_counterexample(n, p)

    def closure(impl):
        for n in ns:
            N = (~masks[n]).astype(np.uint8)
            N[0] = 1
            impl.additive_closure(n, N)

    def cohomology(impl):
        for e in range(1, 21):
            impl.multiplication_kernel(big, 2**e)
            impl.multiplication_image(big, 2**e)

    return {
        f"nilpotent_flags n<={upto}": flags,
        "nilpotent_witness (200 moduli, m=1)": witness,
        f"torsion_counterexample n<={upto}": torsion,
        f"additive_closure n<={upto}": closure,
        "ker/im of 2^e on Z_2^20": cohomology,
    }


def best_of(fn, impl, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(impl)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--upto", type=int, default=3000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    compiled = kernels.BACKENDS.get("compiled")
    if compiled is None:
        raise SystemExit("compiled kernels not built; run `pip install -e . --no-build-isolation`")

    print(f"{'workload':40s} {'numpy [s]':>10s} {'cython [s]':>11s} {'speedup':>8s}")
    for name, fn in workloads(args.upto).items():
        slow = best_of(fn, _kernels_py, args.repeat)
        fast = best_of(fn, compiled, args.repeat)
        print(f"{name:40s} {slow:10.4f} {fast:11.4f} {slow / fast:7.1f}x")


if __name__ == "__main__":
    main()
