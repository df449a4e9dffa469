"""Time the numpy fallback against the compiled kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--sizes 16,64,128]
"""

from __future__ import annotations

import argparse
import random
import sys
import timeit

import numpy as np

from invorder import kernels
from invorder.action import Permutation, generate_group
from invorder.relations import Relation, transitive_closure


def regular_action(n: int, p: int, q: int):
    """Z_p x Z_q acting regularly on the first p*q points."""
    g1, g2 = list(range(n)), list(range(n))
    for i in range(p):
        for j in range(q):
            g1[i * q + j] = ((i + 1) % p) * q + j
            g2[i * q + j] = i * q + (j + 1) % q
    return generate_group(n, [Permutation(tuple(g1)), Permutation(tuple(g2))])


def invariant_order(a, rng: random.Random, seeds: int) -> np.ndarray:
    m = np.eye(a.n, dtype=bool)
    for _ in range(seeds):
        x, y = rng.randrange(a.n), rng.randrange(a.n)
        cand = m.copy()
        for g in a.elements:
            cand[g(x), g(y)] = True
        cand = transitive_closure(Relation(a.n, cand)).matrix
        if not (cand & cand.T & ~np.eye(a.n, dtype=bool)).any():
            m = cand
    return m


def bench(fn, repeat: int) -> float:
    number = 1
    while timeit.timeit(fn, number=number) < 0.05 and number < 1 << 16:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--sizes", default="16,64,128", help="universe sizes for the closure kernel")
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the fallback is timed", file=sys.stderr)
    rng = np.random.default_rng(0)
    rows = []

    for n in (int(s) for s in args.sizes.split(",")):
        m = rng.random((n, n)) < 2.0 / n
        rows.append((f"closure n={n}", {b: bench(lambda b=b: kernels.get_backend(b).transitive_closure(m), args.repeat) for b in backends}))

    for n, p, q in ((8, 2, 4), (16, 4, 4), (24, 4, 6)):
        a = regular_action(n, p, q)
        leq = invariant_order(a, random.Random(n), 2 * n)
        call = (leq, a.perm_array, a.mult_table, a.identity_index)
        rows.append((f"leq_G n={n} |G|={a.order}", {b: bench(lambda b=b: kernels.get_backend(b).leq_g_matrix(*call), args.repeat) for b in backends}))
        rows.append((f"invariance n={n}", {b: bench(lambda b=b: kernels.get_backend(b).invariance_violation(leq, a.generator_array), args.repeat) for b in backends}))

    header = f"{'kernel':<26}" + "".join(f"{b:>14}" for b in backends) + ("     speedup" if len(backends) > 1 else "")
    print(header)
    for name, times in rows:
        line = f"{name:<26}" + "".join(f"{times[b] * 1e6:>12.1f}us" for b in backends)
        if len(backends) > 1:
            line += f"{times['python'] / times['compiled']:>11.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
