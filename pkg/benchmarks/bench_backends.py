"""Compare the compiled kernels against the pure-Python fallback.

Times the neighbour kernels over a realistic node mix (every node visited by
a few seeded p=8 walks), the exhaustive cover count, and one full walk.
Run: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import time

from boolhood import _kernels_py as pure
from boolhood.walker import random_walk

try:
    from boolhood import _kernels as compiled
except ImportError:
    compiled = None


def collect_nodes(p=8, seeds=(0, 1, 2)):
    nodes = []
    for seed in seeds:
        trace = random_walk(p, seed=seed)
        nodes.extend((step.node.masks, p) for step in trace.steps)
    return nodes


def best_of(repeat, fn):
    out = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        out.append(time.perf_counter() - t0)
    return min(out)


def walk_in_subprocess(force_pure):
    env = dict(os.environ)
    if force_pure:
        env["BOOLHOOD_PURE"] = "1"
    else:
        env.pop("BOOLHOOD_PURE", None)
    code = ("import time; t0=time.perf_counter(); "
            "from boolhood.walker import random_walk; "
            "random_walk(8, seed=42); "
            "print(time.perf_counter()-t0)")
    out = subprocess.run([sys.executable, "-c", code], env=env,
                         capture_output=True, text=True, check=True).stdout
    return float(out.strip())


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of this many runs per cell")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernels are not built; rerun pip install to get them")
        return 1

    nodes = collect_nodes()
    rows = []

    def neighbour_sweep(mod):
        def run():
            for masks, p in nodes:
                mod.parents_of(masks, p)
                mod.children_of(masks, p)
        return run

    rows.append(("parents+children, %d p=8 nodes" % len(nodes),
                 best_of(args.repeat, neighbour_sweep(compiled)),
                 best_of(args.repeat, neighbour_sweep(pure))))
    for p in (5, 6):
        rows.append(("count_antichain_covers(%d)" % p,
                     best_of(args.repeat, lambda: compiled.count_antichain_covers(p)),
                     best_of(args.repeat, lambda: pure.count_antichain_covers(p))))
    rows.append(("random_walk(8) end to end (subprocess)",
                 walk_in_subprocess(False), walk_in_subprocess(True)))

    width = max(len(r[0]) for r in rows)
    print(f"{'workload'.ljust(width)}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}")
    for name, fast, slow in rows:
        print(f"{name.ljust(width)}  {fast * 1000:>8.2f}ms  {slow * 1000:>8.2f}ms  "
              f"{slow / fast:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
