"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--csv out.csv]
"""

import argparse
import csv
import sys
import timeit

import numpy as np

from paretofair._backend import kernels_compiled, kernels_py


def cases(rng):
    def front(m, n):
        # points near the simplex so most of them are non-dominated
        w = rng.random((m, n))
        return w / w.sum(axis=1, keepdims=True) + 0.01 * rng.random((m, n))

    return [
        ("nondominated_mask", "M=500 N=3", lambda k, x=rng.random((500, 3)): k.nondominated_mask(x)),
        ("nondominated_mask", "M=2000 N=2", lambda k, x=rng.random((2000, 2)): k.nondominated_mask(x)),
        ("hypervolume", "front M=40 N=3", lambda k, x=front(40, 3): k.hypervolume(x)),
        ("hypervolume", "front M=14 N=4", lambda k, x=front(14, 4): k.hypervolume(x)),
        ("hypervolume", "front M=200 N=2", lambda k, x=front(200, 2): k.hypervolume(x)),
        ("niche_counts", "M=1000 N=2", lambda k, x=rng.random((1000, 2)): k.niche_counts(x, 0.1)),
        ("eps_components", "M=1000 N=3", lambda k, x=rng.random((1000, 3)): k.eps_components(x, 0.05)),
    ]


def best_time(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05 and number < 10_000:
        number *= 4
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv", help="also write results to this CSV file")
    args = ap.parse_args(argv)

    if kernels_compiled is None:
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1

    rows = []
    for name, size, fn in cases(np.random.default_rng(args.seed)):
        a, b = fn(kernels_compiled), fn(kernels_py)
        same = bool(np.array_equal(a, b))
        t_c = best_time(lambda: fn(kernels_compiled), args.repeat)
        t_p = best_time(lambda: fn(kernels_py), args.repeat)
        rows.append((name, size, t_p, t_c, t_p / t_c, same))

    print(f"{'kernel':<18} {'input':<16} {'python ms':>10} {'cython ms':>10} {'speedup':>8}  identical")
    for name, size, t_p, t_c, speed, same in rows:
        print(f"{name:<18} {size:<16} {t_p * 1e3:10.3f} {t_c * 1e3:10.3f} {speed:7.1f}x  {same}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["kernel", "input", "python_s", "cython_s", "speedup", "identical"])
            w.writerows(rows)
    return 0 if all(r[-1] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
