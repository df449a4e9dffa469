"""Brute-force reference implementations.

These evaluate the defining quantifiers directly and share no code with the
production paths beyond the data types.  Hard caps keep them honest.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

import numpy as np

from .action import PermAction, Permutation
from .config import LIMITS
from .errors import CapExceeded
from .lattice import ConeOrder
from .relations import Relation


def sim_g_by_definition(a: PermAction, x: int, y: int) -> bool:
    if a.order > LIMITS.sim_oracle_group:
        raise CapExceeded(f"|G| = {a.order} exceeds oracle cap {LIMITS.sim_oracle_group}")
    for g in a.elements:
        if g(y) != x:
            continue
        p = g.perm
        power = p
        for _ in range(a.order):  # order(g) divides |G|
            if power(y) == y:
                return True
            power = power * p
    return False


def leq_g_by_sequences(a: PermAction, leq: Relation, x: int, y: int, max_len: int | None = None) -> bool:
    """Search for g_1..g_n (n <= max_len) with ``x <= g_i y`` and product e.

    The group is abelian, so the product depends only on the multiset of
    factors and multisets are enumerated instead of sequences.
    """
    max_len = LIMITS.sequence_oracle_length if max_len is None else max_len
    if a.order > LIMITS.sequence_oracle_group or max_len > LIMITS.sequence_oracle_length:
        raise CapExceeded("sequence oracle caps exceeded")
    usable = [g.perm for g in a.elements if leq.matrix[x, g(y)]]
    ident = Permutation.identity(a.n)
    for length in range(1, max_len + 1):
        for seq in itertools.combinations_with_replacement(usable, length):
            prod = ident
            for p in seq:
                prod = prod * p
            if prod == ident:
                return True
    return False


def is_invariant_over_group(r: Relation, a: PermAction) -> bool:
    m = r.matrix
    return all(m[x, y] == m[g(x), g(y)] for g in a.elements for x in range(r.n) for y in range(r.n))


def linear_extensions_by_permutations(r: Relation) -> list[tuple[int, ...]]:
    """Sequences (smallest first) of every linear order containing ``r``."""
    out = []
    for seq in itertools.permutations(range(r.n)):
        pos = {x: i for i, x in enumerate(seq)}
        if all(pos[i] <= pos[j] for i, j in r.pairs()):
            out.append(seq)
    return out


def all_invariant_linear_preorders(a: PermAction) -> Iterator[Relation]:
    """Every invariant linear preorder, one per ordered set partition."""
    n = a.n
    if n > LIMITS.preorder_oracle_universe:
        raise CapExceeded(f"universe {n} exceeds oracle cap {LIMITS.preorder_oracle_universe}")
    for ranks in itertools.product(range(n), repeat=n):
        if set(ranks) != set(range(max(ranks) + 1)):
            continue
        rk = np.asarray(ranks)
        r = Relation(a.universe, rk[:, None] <= rk[None, :])
        if is_invariant_over_group(r, a):
            yield r


def cone_member_brute(cone: ConeOrder, d: Sequence[int], max_mult: int = 6, max_coeff: int = 12) -> tuple[int, tuple[int, ...]] | None:
    """``(n, coeffs)`` with ``coeffs . gens = n * d``, 1 <= n <= max_mult."""
    d = tuple(d)
    for n in range(1, max_mult + 1):
        target = tuple(n * v for v in d)
        for coeffs in itertools.product(range(max_coeff + 1), repeat=len(cone.gens)):
            if cone.combine(coeffs) == target:
                return n, coeffs
    return None


def _monoid_or_zero(cone: ConeOrder, v: tuple[int, ...], bound: int) -> bool:
    if not any(v):
        return True
    return any(
        cone.combine(coeffs) == v for coeffs in itertools.product(range(bound + 1), repeat=len(cone.gens))
    )


def lattice_leq_g_by_sequences(
    cone: ConeOrder, x: Sequence[int], y: Sequence[int], max_len: int = 6, radius: int = 4, bound: int = 8
) -> bool:
    """``x <=_G y`` for Z^k acting on itself by translation, straight from the
    definition: translates g_1..g_n summing to 0 with ``x <= y + g_i``.

    Translates are drawn from the box ``[-radius, radius]^k`` and the plain
    order is tested by bounded monoid search, so False means "not found".
    """
    k = cone.dim
    x, y = tuple(x), tuple(y)
    usable = []
    for g in itertools.product(range(-radius, radius + 1), repeat=k):
        gy = tuple(a + b for a, b in zip(y, g))
        if _monoid_or_zero(cone, tuple(b - a for a, b in zip(x, gy)), bound):
            usable.append(g)
    zero = (0,) * k
    sums = {zero}
    for _ in range(max_len):
        sums = {tuple(a + b for a, b in zip(s, g)) for s in sums for g in usable}
        if zero in sums:
            return True
    return False
