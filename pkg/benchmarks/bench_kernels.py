"""Compare the compiled and pure-Python kernels.

Each workload runs with every available backend swapped into
``ksmooth.kernels``; results are checked for equality before timing is
reported.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import random
import timeit
from contextlib import contextmanager

from ksmooth import kernels
from ksmooth import linalg as la
from ksmooth.geometry import space_l1, space_linf
from ksmooth.operators import operator_ball
from ksmooth.polytope import Polytope, all_faces, vertex_enumeration

NAMES = ("int_rank", "int_solve", "dd_insert", "tight_masks")


@contextmanager
def backend(module):
    saved = {n: getattr(kernels, n) for n in NAMES}
    for n in NAMES:
        setattr(kernels, n, getattr(module, n))
    try:
        yield
    finally:
        for n, f in saved.items():
            setattr(kernels, n, f)


def _rank_workload():
    rng = random.Random(1)
    mats = [[[rng.randint(-9, 9) for _ in range(9)] for _ in range(12)] for _ in range(200)]
    return lambda: [kernels.int_rank([list(r) for r in m]) for m in mats]


def _solve_workload():
    rng = random.Random(2)
    systems = [([[rng.randint(-9, 9) for _ in range(8)] for _ in range(8)], [rng.randint(-9, 9) for _ in range(8)])
               for _ in range(200)]
    return lambda: [la.solve_square(la.matrix(a), la.vector(b)) for a, b in systems]


def _dd_workload():
    h = operator_ball(space_linf(3), space_l1(3))
    return lambda: vertex_enumeration(h).vertices


def _faces_workload():
    cube = Polytope.from_vertices(space_linf(5).ball.vertices)
    return lambda: len(all_faces(cube))


def _brute_workload():
    h = operator_ball(space_linf(3), space_l1(2))
    return lambda: vertex_enumeration(h, "brute").vertices


WORKLOADS = {
    "rank 200x(12x9)": _rank_workload,
    "solve 200x(8x8)": _solve_workload,
    "double description, 32 facets in dim 9": _dd_workload,
    "all faces of the 5-cube": _faces_workload,
    "brute-force vertices, 16 facets in dim 6": _brute_workload,
}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the pure-Python backend is available")
    print(f"{'workload':44s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for name, make in WORKLOADS.items():
        fn = make()
        times, results = {}, {}
        for b, mod in backends.items():
            with backend(mod):
                results[b] = fn()
                times[b] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        if len({repr(r) for r in results.values()}) != 1:
            print(f"{name}: backends disagree")
            return 1
        row = f"{name:44s}" + "".join(f"{times[b] * 1000:10.1f}ms" for b in backends)
        if "cython" in times:
            row += f"{times['python'] / times['cython']:11.2f}x"
        print(row)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
