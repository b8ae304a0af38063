"""Time the compiled and pure-Python counting kernels on the same workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import timeit

from ehrhart_residue import counting
from ehrhart_residue.counting import (
    HPolytopeSpec,
    SimplexSpec,
    count_closed_simplex,
    count_denumerant,
    count_hpolytope,
)

BIG = 10**9

WORKLOADS = [
    ("closed simplex (2,3,5,7) t=12", lambda b: count_closed_simplex(SimplexSpec((2, 3, 5, 7)), 12, BIG, b)),
    ("closed simplex (6,6,6,6) t=10", lambda b: count_closed_simplex(SimplexSpec((6, 6, 6, 6)), 10, BIG, b)),
    ("denumerant (2,3,5) t=100", lambda b: count_denumerant(SimplexSpec((2, 3, 5)), 100, BIG, b)),
    ("H-polytope 3x3 t=10", lambda b: count_hpolytope(HPolytopeSpec(((4, 3, 4), (3, 4, 4), (4, 4, 2))), 10, BIG, b)),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = ["python"] + (["cython"] if counting._native is not None else [])
    print(f"default backend: {counting.BACKEND}")
    print(f"{'workload':34} " + " ".join(f"{b:>11}" for b in backends) + ("    speedup" if len(backends) == 2 else ""))
    for name, fn in WORKLOADS:
        results = {b: fn(b) for b in backends}
        assert len(set(results.values())) == 1, (name, results)
        best = {b: min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat)) for b in backends}
        line = f"{name:34} " + " ".join(f"{best[b] * 1e3:9.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"  {best['python'] / best['cython']:8.1f}x"
        print(line)


if __name__ == "__main__":
    main()
