"""Seeded generators of random instances shared by the test modules."""

from __future__ import annotations

import itertools
import random

import numpy as np

from invorder.action import PermAction, Permutation, generate_group
from invorder.relations import Relation, classify, transitive_closure


def random_perm(rng: random.Random, points: list[int], n: int) -> Permutation:
    images = list(range(n))
    shuffled = points[:]
    rng.shuffle(shuffled)
    for src, dst in zip(points, shuffled):
        images[src] = dst
    return Permutation(tuple(images))


def random_abelian_action(rng: random.Random, max_n: int = 6, max_order: int = 8) -> PermAction:
    """Abelian action with at most two generators and |G| <= max_order."""
    while True:
        n = rng.randint(1, max_n)
        mode = rng.choice(["trivial", "cyclic", "powers", "disjoint", "regular"])
        if mode == "trivial":
            gens = [] if rng.random() < 0.5 else [Permutation.identity(n)]
        elif mode == "cyclic":
            gens = [random_perm(rng, list(range(n)), n)]
        elif mode == "powers":
            s = random_perm(rng, list(range(n)), n)
            gens = [s ** rng.randint(1, 3), s ** rng.randint(1, 3)]
        elif mode == "disjoint":
            pts = list(range(n))
            rng.shuffle(pts)
            cut = rng.randint(0, n)
            gens = [random_perm(rng, pts[:cut], n), random_perm(rng, pts[cut:], n)]
        else:
            # Z_p x Z_q acting regularly on a block of p*q points, rest fixed
            p, q = rng.choice([(2, 1), (3, 1), (2, 2), (4, 1), (2, 3), (5, 1), (6, 1)])
            if p * q > n:
                continue
            block = rng.sample(range(n), p * q)
            g1, g2 = list(range(n)), list(range(n))
            for i in range(p):
                for j in range(q):
                    src = block[i * q + j]
                    g1[src] = block[((i + 1) % p) * q + j]
                    g2[src] = block[i * q + (j + 1) % q]
            gens = [Permutation(tuple(g1)), Permutation(tuple(g2))]
        a = generate_group(n, gens)
        if a.order <= max_order:
            return a


def orbit_pairs(a: PermAction, x: int, y: int) -> np.ndarray:
    m = np.zeros((a.n, a.n), dtype=bool)
    for g in a.elements:
        m[g(x), g(y)] = True
    return m


def random_invariant_order(rng: random.Random, a: PermAction, seeds: int | None = None, partial: bool = True) -> Relation:
    """Invariant closure of random seed pairs; with ``partial`` only seeds that
    keep antisymmetry are kept."""
    cur = Relation.equality(a.universe)
    seeds = rng.randint(0, 2 * a.n) if seeds is None else seeds
    for _ in range(seeds):
        x, y = rng.randrange(a.n), rng.randrange(a.n)
        cand = transitive_closure(Relation(a.universe, cur.matrix | orbit_pairs(a, x, y)))
        if partial and not classify(cand).antisymmetric:
            continue
        cur = cand
    return cur


def random_invariant_linear_preorder(rng: random.Random, a: PermAction) -> Relation:
    """Random ranking of the orbits, lifted to the points."""
    reps = [min(g(x) for g in a.elements) for x in range(a.n)]
    orbit_reps = sorted(set(reps))
    ranks = {r: rng.randrange(len(orbit_reps)) for r in orbit_reps}
    return Relation.from_ranks(a.universe, [ranks[reps[x]] for x in range(a.n)])


def naive_closure(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    n = len(m)
    changed = True
    while changed:
        changed = False
        for i, j, k in itertools.product(range(n), repeat=3):
            if m[i, j] and m[j, k] and not m[i, k]:
                m[i, k] = True
                changed = True
    return m


def commuting_pairs(n: int):
    """All pairs of commuting permutations on n points."""
    perms = [Permutation(p) for p in itertools.permutations(range(n))]
    for p in perms:
        for q in perms:
            if p * q == q * p:
                yield p, q


def distinct_abelian_groups(n: int) -> list[PermAction]:
    """Every group generated by at most two commuting permutations of n points,
    deduplicated by element set."""
    seen = set()
    out = []
    for p, q in commuting_pairs(n):
        a = generate_group(n, [p, q])
        key = frozenset(g.perm for g in a.elements)
        if key not in seen:
            seen.add(key)
            out.append(a)
    return out
