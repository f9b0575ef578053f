"""Compare the compiled binomial kernel with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]

Two stages are timed per workload: the binomial Buchberger run on the toric
generators ("gb"), and the whole toric ideal construction including the
saturation steps ("toric"), with the kernel class swapped in.  The gb results
of both kernels are checked to agree.
"""

import argparse
import statistics
import time

from projclosure import _kernels_py, kernels
from projclosure.groebner import _binomial_gb
from projclosure.semigroup import AffineSemigroup, simplicial
from projclosure.toric import graded_order, toric_ideal

try:
    from projclosure import _kernels as _cy
except ImportError:
    _cy = None

WORKLOADS = {
    "numerical 5,6,7,8,9": [(5,), (6,), (7,), (8,), (9,)],
    "numerical 7,9,11,13,15,17": [(7,), (9,), (11,), (13,), (15,), (17,)],
    "rational normal quartic": [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)],
    "planar 11": [(11, 0), (0, 11), (2, 9), (3, 8), (5, 6), (7, 4), (9, 2)],
    "space 3d": [(6, 0, 0), (0, 6, 0), (0, 0, 6), (1, 2, 3), (2, 1, 3), (3, 3, 0), (1, 4, 1)],
    "numerical primes 11..31": [(g,) for g in (11, 13, 17, 19, 23, 29, 31)],
    "numerical primes 13..41": [(g,) for g in (13, 17, 19, 23, 29, 31, 37, 41)],
    "planar 15": [(15, 0), (0, 15), (1, 14), (4, 11), (6, 9), (8, 7), (13, 2), (11, 4)],
}


def timed(fn, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        runs.append(time.perf_counter() - t0)
    return statistics.median(runs), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if _cy is None:
        print("compiled kernel not built; only the Python timings are shown")
    print(f"{'workload':28s} {'stage':6s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for name, gens in WORKLOADS.items():
        S = simplicial(AffineSemigroup(tuple(gens)))
        I = toric_ideal(S)
        order = graded_order(S, S.extremal)
        tp, ref = timed(lambda: _binomial_gb(I.generators, order, True, _kernels_py.BinomialBasis), args.repeat)
        row = [(tp, ref)]
        if _cy is not None:
            row.append(timed(lambda: _binomial_gb(I.generators, order, True, _cy.BinomialBasis), args.repeat))
            if row[1][1] != ref:
                raise SystemExit(f"kernels disagree on {name}")
        report(name, "gb", [t for t, _ in row])
        saved = kernels.BinomialBasis
        times = []
        try:
            for cls in [_kernels_py.BinomialBasis] + ([_cy.BinomialBasis] if _cy else []):
                kernels.BinomialBasis = cls
                times.append(timed(lambda: toric_ideal(S), args.repeat)[0])
        finally:
            kernels.BinomialBasis = saved
        report(name, "toric", times)


def report(name, stage, times):
    if len(times) == 1:
        print(f"{name:28s} {stage:6s} {times[0]:10.4f} {'-':>10s} {'-':>8s}")
    else:
        print(f"{name:28s} {stage:6s} {times[0]:10.4f} {times[1]:10.4f} {times[0] / times[1]:7.1f}x")


if __name__ == "__main__":
    main()
