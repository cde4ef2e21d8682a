"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Reports per-kernel timings on compound-minor construction and modular
elimination, then an end-to-end shift of a few suspensions.
"""

import argparse
import random
import time

from extshift import _kernels_py
from extshift.complexes import SimplicialComplex, suspension
from extshift.field import DEFAULT_PRIME

try:
    from extshift import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

P = DEFAULT_PRIME


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench_kernels(repeat):
    rng = random.Random(0)
    rows_out = []
    for n in (6, 8, 10):
        phi = [[rng.randrange(P) for _ in range(n)] for _ in range(n)]
        d = n // 2
        cases = {
            "compound": lambda impl, phi=phi, d=d: impl.compound_levels(phi, d, P),
        }
        size = len(_kernels_py.masks_of_size(n, d))
        mat = [[rng.randrange(P) for _ in range(size)] for _ in range(size // 2)]
        cases["echelon"] = lambda impl, mat=mat, size=size: impl.echelon_pivots(mat, size, P)
        for name, fn in cases.items():
            py = best_of(lambda: fn(_kernels_py), repeat)
            cy = best_of(lambda: fn(_kernels_c), repeat) if _kernels_c else float("nan")
            rows_out.append((f"{name} n={n}", py, cy))
    return rows_out


def bench_shift(repeat):
    import importlib

    import extshift.kernels as kernels
    import extshift.shifting as shifting

    sigma = suspension(suspension(SimplicialComplex.from_facets(4, [[1, 2], [3, 4]])))
    out = []
    for backend, impl in (("python", _kernels_py), ("cython", _kernels_c)):
        if impl is None:
            continue
        kernels.echelon_pivots = impl.echelon_pivots
        kernels.compound_levels = impl.compound_levels
        out.append((backend, best_of(lambda: shifting.exterior_shift(sigma), repeat)))
    importlib.reload(kernels)
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':<20}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, py, cy in bench_kernels(args.repeat):
        print(f"{name:<20}{py * 1e3:>14.3f}{cy * 1e3:>14.3f}{py / cy:>10.1f}")
    print()
    times = dict(bench_shift(args.repeat))
    for backend, t in times.items():
        print(f"shift of double suspension (n=8), {backend:<7} {t * 1e3:.1f} ms")
    if len(times) == 2:
        print(f"end-to-end speedup {times['python'] / times['cython']:.1f}x")


if __name__ == "__main__":
    main()
