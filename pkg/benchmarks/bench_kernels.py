"""Compare the pure-Python and Cython kernels.

    python benchmarks/bench_kernels.py [--sizes 20 50 100] [--instances 50] [--repeat 3]

Prints one line per (kernel, n, backend) with the best wall time over the
repeats, plus the speedup of each backend relative to pure Python.  The
backends are checked to agree on every instance before timing.
"""

import argparse
import timeit

from triflip.generators import gen_random, gen_stacked
from triflip.kernels import backends


def corpus(n, count):
    out = []
    for seed in range(count):
        tri = gen_stacked(n, seed) if seed % 2 else gen_random(n, 2 * n, seed)
        out.append(tri)
    return out


KERNELS = {
    "septri_scan": lambda mod, t: mod.septri_scan(t.n, t.rot, t.outer),
    "canonical_code": lambda mod, t: mod.canonical_code(t.rot),
}


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 50, 100])
    ap.add_argument("--instances", type=int, default=50)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    mods = backends()
    if "cython" not in mods:
        print("compiled backend not available; timing the Python kernels only")
    print(f"{'kernel':<16}{'n':>5}  {'backend':<8}{'seconds':>10}{'speedup':>9}")
    for name, call in KERNELS.items():
        for n in args.sizes:
            tris = corpus(n, args.instances)
            results = {b: [call(m, t) for t in tris] for b, m in mods.items()}
            ref = results["python"]
            for b, res in results.items():
                if res != ref:
                    raise SystemExit(f"{name}: backend {b} disagrees with python at n={n}")
            base = None
            for b, m in mods.items():
                secs = min(timeit.repeat(lambda: [call(m, t) for t in tris],
                                         number=1, repeat=args.repeat))
                base = base or secs
                print(f"{name:<16}{n:>5}  {b:<8}{secs:>10.4f}{base / secs:>8.1f}x")


if __name__ == "__main__":
    main()
