"""Compare the compiled and pure-Python homology kernels on oracle workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Each workload lists the (multidegree, generators) pairs the oracle visits,
then times both kernels over the same list and checks they agree.
"""

import argparse
import random
import statistics
import time

from monolin import kernels
from monolin.ideal import MonomialIdeal
from monolin.lattice import lcm_closure
from monolin.linearization import lin, star_lin
from monolin.monomial import Monomial, RingContext


def oracle_calls(I):
    gens = [g.exps for g in I.generators]
    calls = []
    for b in sorted(lcm_closure(gens)):
        if any(b):
            calls.append((b, [g for g in gens if all(x <= y for x, y in zip(g, b))]))
    return calls


def random_equigenerated(rng, n, d, m):
    R = RingContext(tuple(f"x{i}" for i in range(1, n + 1)))
    gens = set()
    while len(gens) < m:
        e = [0] * n
        for _ in range(d):
            e[rng.randrange(n)] += 1
        if max(e) <= 3:
            gens.add(Monomial(R, tuple(e)))
    return MonomialIdeal(R, gens)


def workloads(seed):
    R = RingContext.parse("x1..x5")
    yield "LIN(three triangles)", star_lin(MonomialIdeal.parse("x1*x2*x3, x1*x2*x4, x1*x2*x5", R)).ideal
    yield "LIN(x1^2x2, x1x2x3)", star_lin(MonomialIdeal.parse("x1^2*x2, x1*x2*x3", R)).ideal
    R6 = RingContext.parse("x1..x6")
    yield "LIN(3-path in 6 variables)", star_lin(MonomialIdeal.parse("x1*x2*x3, x2*x3*x4, x3*x4*x5, x4*x5*x6", R6)).ideal
    rng = random.Random(seed)
    for k in range(3):
        I = random_equigenerated(rng, 4, 3, 4)
        yield f"Lin(random #{k + 1}: {I})", lin(I).ideal


def best_of(fn, calls, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        for b, gens in calls:
            fn(b, gens)
        times.append(time.perf_counter() - start)
    return min(times), statistics.mean(times)


def trim(v):
    v = list(v or [])
    while v and v[-1] == 0:
        v.pop()
    return v


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        raise SystemExit("compiled kernel not available; build it with: python3 setup.py build_ext --inplace")

    print(f"{'workload':58} {'calls':>6} {'python s':>9} {'cython s':>9} {'speedup':>8}")
    for label, I in workloads(args.seed):
        calls = oracle_calls(I)
        for b, gens in calls:
            if trim(kernels.compiled_multidegree_betti(b, gens)) != trim(kernels.python_multidegree_betti(b, gens)):
                raise SystemExit(f"kernels disagree on {label} at {b}")
        py, _ = best_of(kernels.python_multidegree_betti, calls, args.repeat)
        cy, _ = best_of(kernels.compiled_multidegree_betti, calls, args.repeat)
        print(f"{label[:58]:58} {len(calls):6d} {py:9.4f} {cy:9.4f} {py / cy:7.1f}x")


if __name__ == "__main__":
    main()
