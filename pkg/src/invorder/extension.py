"""Invariant extensions of orders under abelian permutation actions.

``x <=_G y`` holds when some finite sequence g_1..g_n of group elements with
product e satisfies ``x <= g_i y`` for every i.  With H(x, y) the set of g
such that ``x <= g y``, that is exactly "e lies in the semigroup generated by
H(x, y)", which is what the kernels compute.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .action import (
    EquivalenceClasses,
    GroupElem,
    PermAction,
    finite_orbit_witness,
    powerset_action,
    quotient_action,
    sim_g,
    subset_inclusion,
)
from .config import LIMITS
from .errors import CapExceeded, InadmissiblePair, InvalidRelation, NotInvariantError, OrbitConditionError
from .relations import (
    Relation,
    Universe,
    classify,
    condensation,
    enumerate_linear_extensions,
    invariance_violation,
    lift,
    transitive_closure,
)

logger = logging.getLogger(__name__)


def _require_invariant(r: Relation, a: PermAction) -> None:
    bad = invariance_violation(r, a)
    if bad is not None:
        g, x, y = bad
        raise NotInvariantError(f"relation not invariant under {g} at ({x}, {y})", witness=bad)


def _require(a: PermAction, leq: Relation, kind: str) -> None:
    a.require_abelian()
    c = classify(leq)
    ok = c.is_partial_order if kind == "partial-order" else c.is_preorder
    if not ok:
        raise InvalidRelation(f"input relation is not a {kind}")
    _require_invariant(leq, a)


def _leq_g_matrix(a: PermAction, m: np.ndarray) -> np.ndarray:
    return kernels.leq_g_matrix(m, a.perm_array, a.mult_table, a.identity_index)


def leq_g(a: PermAction, leq: Relation) -> Relation:
    """The relation ``<=_G`` of an invariant preorder.

    Preorders are first condensed to the partial order on their classes of
    mutually comparable elements, and the result is lifted back.
    """
    _require(a, leq, "preorder")
    if classify(leq).antisymmetric:
        return Relation(leq.universe, _leq_g_matrix(a, leq.matrix))
    cls, part = condensation(leq)
    classes = _classes_from_index(leq.universe, cls)
    qa = quotient_action(a, classes)
    return lift(Relation(part.universe, _leq_g_matrix(qa, part.matrix)), cls, leq.universe)


def _classes_from_index(universe: Universe, cls: Sequence[int]) -> EquivalenceClasses:
    first: dict[int, int] = {}
    for x, c in enumerate(cls):
        first.setdefault(c, x)
    return EquivalenceClasses(universe, tuple(first[c] for c in cls))


def leq_g_witness(a: PermAction, leq: Relation, x: int, y: int) -> list[GroupElem] | None:
    """A shortest sequence g_1..g_n with ``x <= g_i y`` and product e, or None."""
    hs = [i for i, g in enumerate(a.elements) if leq(x, g(y))]
    if not hs:
        return None
    mult = a.mult_table
    parent: dict[int, tuple[int, int] | None] = {h: None for h in hs}
    frontier = list(hs)
    while a.identity_index not in parent and frontier:
        nxt = []
        for u in frontier:
            for h in hs:
                v = int(mult[u, h])
                if v not in parent:
                    parent[v] = (u, h)
                    nxt.append(v)
        frontier = nxt
    if a.identity_index not in parent:
        return None
    seq = []
    node = a.identity_index
    while parent[node] is not None:
        node, h = parent[node]
        seq.append(h)
    seq.append(node)
    return [a.elements[i] for i in reversed(seq)]


def verify_leq_g_witness(a: PermAction, leq: Relation, x: int, y: int, seq: Sequence[GroupElem]) -> bool:
    if not seq:
        return False
    prod = a.elements[a.identity_index].perm
    for g in seq:
        if not leq(x, g(y)):
            return False
        prod = prod * g.perm
    return prod.is_identity()


def _orbit_pairs(a: PermAction, x: int, y: int) -> np.ndarray:
    m = np.zeros((a.n, a.n), dtype=bool)
    m[a.perm_array[:, x], a.perm_array[:, y]] = True
    return m


def extend_step(a: PermAction, leq: Relation, x: int, y: int) -> Relation:
    """Smallest invariant preorder containing ``leq`` and ``x <= y``.

    Requires ``y <=_G x`` to fail; otherwise :class:`InadmissiblePair` is
    raised with a semigroup witness for ``y <=_G x``.  The result is then an
    invariant partial order.
    """
    _require(a, leq, "partial-order")
    witness = leq_g_witness(a, leq, y, x)
    if witness is not None:
        raise InadmissiblePair(f"{y} <=_G {x} already holds", witness=witness)
    out = transitive_closure(Relation(leq.universe, leq.matrix | _orbit_pairs(a, x, y)))
    assert classify(out).antisymmetric, "extension step produced a cycle"
    return out


def invariant_linear_extension(a: PermAction, leq: Relation) -> Relation:
    """Invariant linear order extending ``leq``.

    Repeats :func:`extend_step` on the lexicographically first pair (x, y)
    with ``x <= y`` false and ``y <=_G x`` false.  Raises
    :class:`OrbitConditionError` when some element has a finite orbit of
    size > 1, since then no invariant linear order exists.
    """
    _require(a, leq, "partial-order")
    bad = finite_orbit_witness(a)
    if bad is not None:
        g, orb = bad
        raise OrbitConditionError(f"element {g.perm} has the finite orbit {sorted(orb)}", witness=bad)
    cur = leq
    while True:
        lg = _leq_g_matrix(a, cur.matrix)
        cand = np.argwhere(~cur.matrix & ~lg.T)
        if not len(cand):
            break
        x, y = (int(v) for v in cand[0])
        cur = transitive_closure(Relation(cur.universe, cur.matrix | _orbit_pairs(a, x, y)))
    assert classify(cur).is_linear_order
    return cur


@dataclass(frozen=True)
class PreorderPipeline:
    condensed: Relation  # partial order on classes of mutual comparability
    condensed_classes: tuple[int, ...]
    orbit_classes: EquivalenceClasses  # ~G on the condensed universe
    base: Relation  # order on orbit classes, via <=_G
    base_via_leq: Relation  # same construction using <= instead of <=_G
    linear: Relation  # invariant linear order on orbit classes
    result: Relation


def preorder_pipeline(a: PermAction, leq: Relation) -> PreorderPipeline:
    _require(a, leq, "preorder")
    cls, part = condensation(leq)
    ca = quotient_action(a, _classes_from_index(leq.universe, cls))
    orb = EquivalenceClasses.from_relation(sim_g(ca))
    ya = quotient_action(ca, orb)

    lg = _leq_g_matrix(ca, part.matrix)
    oidx = np.asarray(orb.class_index)
    k = ya.n
    onehot = np.zeros((part.n, k), dtype=np.int64)
    onehot[np.arange(part.n), oidx] = 1
    base = Relation(ya.universe, (onehot.T @ lg.astype(np.int64) @ onehot) > 0)
    base_leq = Relation(ya.universe, (onehot.T @ part.matrix.astype(np.int64) @ onehot) > 0)
    if base != base_leq:
        logger.info("orbit-class order differs between <=_G and <= representatives")
    if not classify(base).is_partial_order:
        raise AssertionError("order on orbit classes is not a partial order")

    linear = invariant_linear_extension(ya, base)
    on_condensed = lift(linear, oidx, part.universe)
    result = lift(on_condensed, cls, leq.universe)
    return PreorderPipeline(part, tuple(cls), orb, base, base_leq, linear, result)


def invariant_linear_preorder_extension(a: PermAction, leq: Relation) -> Relation:
    """Invariant linear preorder extending ``leq`` that keeps every strict pair strict."""
    return preorder_pipeline(a, leq).result


def intersection_of_invariant_extensions(a: PermAction, leq: Relation, cap: int | None = None) -> Relation:
    """Meet of all invariant linear orders extending ``leq``, by enumeration.

    Checked against :func:`leq_g` before returning.
    """
    _require(a, leq, "partial-order")
    cap = LIMITS.intersection_universe if cap is None else cap
    if leq.n > cap:
        raise CapExceeded(f"universe {leq.n} exceeds intersection cap {cap}")
    bad = finite_orbit_witness(a)
    if bad is not None:
        g, orb = bad
        raise OrbitConditionError(f"element {g.perm} has the finite orbit {sorted(orb)}", witness=bad)
    m = np.ones((leq.n, leq.n), dtype=bool)
    for lin in enumerate_linear_extensions(leq, invariant_under=a, cap=cap):
        m &= lin.matrix
    out = Relation(leq.universe, m)
    if out != leq_g(a, leq):
        raise AssertionError("intersection of invariant linear extensions differs from <=_G")
    return out


def strong_invariance_violation(r: Relation, a: PermAction) -> tuple[GroupElem, int, int] | None:
    """First (g, x, y) where ``x R y``, ``gx R y`` and ``x R gy`` disagree."""
    m = r.matrix
    for g in a.elements:
        p = a.perm_array[a.index[g.perm]]
        bad = np.argwhere((m != m[p, :]) | (m != m[:, p]))
        if len(bad):
            x, y = bad[0]
            return g, int(x), int(y)
    return None


def is_strongly_invariant(r: Relation, a: PermAction) -> bool:
    return strong_invariance_violation(r, a) is None


def powerset_preorder(a: PermAction, cap: int | None = None) -> Relation:
    """Invariant linear preorder on all subsets with proper inclusion strict."""
    a.require_abelian()
    pa = powerset_action(a, cap=cap)
    inclusion = subset_inclusion(a.n).with_universe(pa.universe)
    return invariant_linear_preorder_extension(pa, inclusion)
