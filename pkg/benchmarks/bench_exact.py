"""Compare the compiled and pure-Python search kernels on fixed instances.

    python benchmarks/bench_exact.py [--repeat 3]
"""

import argparse
import time

from pcfcolor.exact import _backend, decide_k
from pcfcolor.families import (
    Bouquet,
    CartesianProduct,
    Complete,
    CompleteSubdivision,
    Corona,
    Cycle,
    FChain,
    Hypercube,
    generate,
)

CASES = [
    ("C11, pcf, k=3", generate(Cycle(11)), "pcf", 3),
    ("Q4, pcf, k=3", generate(Hypercube(4)), "pcf", 3),
    ("SK5, pcf, k=4", generate(CompleteSubdivision(Complete(5))), "pcf", 4),
    ("SK6, pcf, k=5", generate(CompleteSubdivision(Complete(6))), "pcf", 5),
    ("FChain(2), pcf, k=4", generate(FChain(2)), "pcf", 4),
    ("Bouquet(3,1), pcf, k=3", generate(Bouquet(3, 1)), "pcf", 3),
    ("Corona(K3xK3), pcf, k=3", generate(Corona(CartesianProduct(Complete(3), Complete(3)))), "pcf", 3),
    ("Q4, odd, k=3", generate(Hypercube(4)), "odd", 3),
]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _backend.compiled_search is None:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'instance':28} {'python s':>10} {'cython s':>10} {'speedup':>8}  feasible")
    for name, g, variant, k in CASES:
        tp, rp = best_of(lambda: decide_k(g, variant, k, backend="python"), args.repeat)
        if _backend.compiled_search is None:
            print(f"{name:28} {tp:10.4f} {'-':>10} {'-':>8}  {rp is not None}")
            continue
        tc, rc = best_of(lambda: decide_k(g, variant, k, backend="cython"), args.repeat)
        assert rp == rc, name
        print(f"{name:28} {tp:10.4f} {tc:10.4f} {tp / tc:8.1f}  {rp is not None}")


if __name__ == "__main__":
    main()
