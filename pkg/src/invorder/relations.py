"""Binary relations on a finite universe stored as dense boolean matrices.

``r.matrix[i, j]`` means ``i <= j``.  Relations are immutable; every
operation returns a new one.  Reflexivity is never added behind the caller's
back: use ``reflexive_close=True`` when building an order from its strict
pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

import numpy as np

from . import kernels
from .config import LIMITS
from .errors import CapExceeded, InvalidRelation, UniverseMismatch

if TYPE_CHECKING:
    from .action import PermAction


@dataclass(frozen=True)
class Universe:
    size: int
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.size < 1:
            raise InvalidRelation(f"universe size must be positive, got {self.size}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        else:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if len(self.labels) != self.size:
            raise InvalidRelation(f"{len(self.labels)} labels for a universe of size {self.size}")
        if len(set(self.labels)) != self.size:
            raise InvalidRelation("universe labels must be distinct")

    def __len__(self) -> int:
        return self.size

    def label(self, i: int) -> str:
        return self.labels[i]

    def index(self, label: str) -> int:
        return self.labels.index(label)


class Relation:
    __slots__ = ("universe", "matrix")

    def __init__(self, universe: Universe | int, matrix):
        if isinstance(universe, int):
            universe = Universe(universe)
        m = np.array(matrix, dtype=bool)
        if m.shape != (universe.size, universe.size):
            raise InvalidRelation(f"matrix shape {m.shape} does not match universe of size {universe.size}")
        m.setflags(write=False)
        self.universe = universe
        self.matrix = m

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_pairs(cls, universe: Universe | int, pairs: Iterable[Sequence[int]], reflexive_close: bool = False) -> Relation:
        if isinstance(universe, int):
            universe = Universe(universe)
        n = universe.size
        m = np.zeros((n, n), dtype=bool)
        for pair in pairs:
            i, j = pair
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidRelation(f"pair ({i}, {j}) outside universe of size {n}")
            m[i, j] = True
        if reflexive_close:
            np.fill_diagonal(m, True)
        return cls(universe, m)

    @classmethod
    def equality(cls, universe: Universe | int) -> Relation:
        if isinstance(universe, int):
            universe = Universe(universe)
        return cls(universe, np.eye(universe.size, dtype=bool))

    @classmethod
    def from_ranks(cls, universe: Universe | int, ranks: Sequence[int]) -> Relation:
        """Linear preorder with ``i <= j`` iff ``ranks[i] <= ranks[j]``."""
        r = np.asarray(ranks)
        return cls(universe, r[:, None] <= r[None, :])

    @classmethod
    def from_sequence(cls, universe: Universe | int, seq: Sequence[int]) -> Relation:
        """Linear order listing the elements from smallest to largest."""
        ranks = [0] * len(seq)
        for pos, x in enumerate(seq):
            ranks[x] = pos
        return cls.from_ranks(universe, ranks)

    # -- basic protocol -----------------------------------------------------

    @property
    def n(self) -> int:
        return self.universe.size

    def __contains__(self, pair) -> bool:
        i, j = pair
        return bool(self.matrix[i, j])

    def __call__(self, i: int, j: int) -> bool:
        return bool(self.matrix[i, j])

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(i), int(j)) for i, j in np.argwhere(self.matrix)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self.universe == other.universe and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self.universe, self.matrix.tobytes()))

    def __repr__(self) -> str:
        return f"Relation(n={self.n}, pairs={self.pairs()})"

    def _check_same(self, other: Relation) -> None:
        if self.n != other.n:
            raise UniverseMismatch(f"universes of size {self.n} and {other.n}")

    def __or__(self, other: Relation) -> Relation:
        self._check_same(other)
        return Relation(self.universe, self.matrix | other.matrix)

    def __and__(self, other: Relation) -> Relation:
        self._check_same(other)
        return Relation(self.universe, self.matrix & other.matrix)

    def __le__(self, other: Relation) -> bool:
        """Containment of pair sets (``other`` extends ``self``)."""
        self._check_same(other)
        return bool(np.all(~self.matrix | other.matrix))

    def transpose(self) -> Relation:
        return Relation(self.universe, self.matrix.T)

    def with_universe(self, universe: Universe) -> Relation:
        return Relation(universe, self.matrix)

    def relabel(self, perm: Sequence[int]) -> Relation:
        """Image under the bijection ``perm``: ``(perm[i], perm[j])`` for each pair."""
        p = np.asarray(perm)
        m = np.zeros_like(self.matrix)
        m[np.ix_(p, p)] = self.matrix
        return Relation(self.universe, m)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": list(self.universe.labels),
            "pairs": [list(p) for p in self.pairs()],
            "reflexiveClose": False,
        }

    @classmethod
    def from_json(cls, data: dict | str, cap: int | None = None) -> Relation:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            pairs = [(int(i), int(j)) for i, j in data.get("pairs", [])]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRelation(f"malformed relation JSON: {exc}") from exc
        cap = LIMITS.relation_universe if cap is None else cap
        if n > cap:
            raise CapExceeded(f"relation universe {n} exceeds cap {cap}")
        universe = Universe(n, tuple(data.get("labels") or ()))
        return cls.from_pairs(universe, pairs, reflexive_close=bool(data.get("reflexiveClose", False)))


@dataclass(frozen=True)
class RelationClass:
    reflexive: bool
    symmetric: bool
    transitive: bool
    antisymmetric: bool
    total: bool

    @property
    def is_preorder(self) -> bool:
        return self.reflexive and self.transitive

    @property
    def is_partial_order(self) -> bool:
        return self.is_preorder and self.antisymmetric

    @property
    def is_linear_preorder(self) -> bool:
        return self.is_preorder and self.total

    @property
    def is_linear_order(self) -> bool:
        return self.is_partial_order and self.total

    @property
    def is_equivalence(self) -> bool:
        return self.is_preorder and self.symmetric

    @property
    def kinds(self) -> frozenset[str]:
        tags = {
            "preorder": self.is_preorder,
            "partial-order": self.is_partial_order,
            "linear-preorder": self.is_linear_preorder,
            "linear-order": self.is_linear_order,
            "equivalence": self.is_equivalence,
        }
        return frozenset(k for k, v in tags.items() if v)

    @property
    def kind(self) -> str:
        for k in ("linear-order", "equivalence", "linear-preorder", "partial-order", "preorder"):
            if k in self.kinds:
                return k
        return "raw"

    def to_json(self) -> dict:
        return {
            "reflexive": self.reflexive,
            "symmetric": self.symmetric,
            "transitive": self.transitive,
            "antisymmetric": self.antisymmetric,
            "total": self.total,
            "kind": self.kind,
            "kinds": sorted(self.kinds),
        }


def classify(r: Relation) -> RelationClass:
    m = r.matrix
    n = r.n
    # transitivity as the literal triple quantifier: m[i,j] & m[j,k] -> m[i,k]
    two_step = (m.astype(np.int64) @ m.astype(np.int64)) > 0
    off = ~np.eye(n, dtype=bool)
    return RelationClass(
        reflexive=bool(m.diagonal().all()),
        symmetric=bool(np.array_equal(m, m.T)),
        transitive=bool(np.all(~two_step | m)),
        antisymmetric=not bool(np.any(m & m.T & off)),
        total=bool(np.all(m | m.T)),
    )


def transitive_closure(r: Relation) -> Relation:
    return Relation(r.universe, kernels.transitive_closure(r.matrix))


def strict_part(r: Relation) -> Relation:
    return Relation(r.universe, r.matrix & ~r.matrix.T)


def symmetric_part(r: Relation) -> Relation:
    return Relation(r.universe, r.matrix & r.matrix.T)


def is_invariant(r: Relation, a: PermAction) -> bool:
    return invariance_violation(r, a) is None


def invariance_violation(r: Relation, a: PermAction):
    """First ``(generator_name, x, y)`` with ``x R y`` differing from ``gx R gy``.

    Checking the generators is enough: the set of permutations preserving R
    is a group, so it contains G once it contains G's generators.
    """
    if a.n != r.n:
        raise UniverseMismatch(f"action on {a.n} points, relation on {r.n}")
    if not a.generators:
        return None
    hit = kernels.invariance_violation(r.matrix, a.generator_array)
    if hit is None:
        return None
    k, x, y = hit
    return (a.generator_names[k], x, y)


def require_partial_order(r: Relation, what: str = "relation") -> None:
    if not classify(r).is_partial_order:
        raise InvalidRelation(f"{what} is not a partial order")


def topo_linear_extension(r: Relation) -> Relation:
    """Szpilrajn extension by repeatedly taking the smallest available minimal element."""
    require_partial_order(r)
    strict = strict_part(r).matrix
    indeg = strict.sum(axis=0)
    done = np.zeros(r.n, dtype=bool)
    seq = []
    for _ in range(r.n):
        x = int(np.flatnonzero((indeg == 0) & ~done)[0])
        done[x] = True
        seq.append(x)
        indeg = indeg - strict[x]
    return Relation.from_sequence(r.universe, seq)


def enumerate_linear_extensions(r: Relation, invariant_under: PermAction | None = None, cap: int | None = None) -> Iterator[Relation]:
    """Yield every linear order extending the partial order ``r`` (optionally
    only the ones invariant under ``invariant_under``), in lexicographic order
    of their element sequences."""
    require_partial_order(r)
    cap = LIMITS.linear_extension_universe if cap is None else cap
    if r.n > cap:
        raise CapExceeded(f"universe {r.n} exceeds enumeration cap {cap}")
    if invariant_under is not None and invariant_under.n != r.n:
        raise UniverseMismatch("action and relation universes differ")
    n = r.n
    strict = strict_part(r).matrix
    preds = [frozenset(np.flatnonzero(strict[:, j]).tolist()) for j in range(n)]
    seq: list[int] = []
    placed: set[int] = set()

    def backtrack() -> Iterator[list[int]]:
        if len(seq) == n:
            yield seq
            return
        for x in range(n):
            if x not in placed and preds[x] <= placed:
                seq.append(x)
                placed.add(x)
                yield from backtrack()
                placed.discard(x)
                seq.pop()

    for s in backtrack():
        lin = Relation.from_sequence(r.universe, s)
        if invariant_under is None or is_invariant(lin, invariant_under):
            yield lin


def condensation(r: Relation) -> tuple[list[int], Relation]:
    """Collapse mutual comparability of a preorder.

    Returns ``(cls, quotient)`` where ``cls[x]`` is the index of x's class
    (classes numbered by smallest member) and ``quotient`` is the induced
    partial order on classes.
    """
    if not classify(r).is_preorder:
        raise InvalidRelation("condensation needs a preorder")
    sym = r.matrix & r.matrix.T
    cls = [-1] * r.n
    reps: list[int] = []
    for x in range(r.n):
        if cls[x] < 0:
            for y in np.flatnonzero(sym[x]):
                cls[int(y)] = len(reps)
            reps.append(x)
    labels = tuple("~".join(r.universe.labels[y] for y in range(r.n) if cls[y] == c) for c in range(len(reps)))
    q = r.matrix[np.ix_(reps, reps)]
    return cls, Relation(Universe(len(reps), labels), q)


def lift(quotient: Relation, cls: Sequence[int], universe: Universe) -> Relation:
    c = np.asarray(cls)
    return Relation(universe, quotient.matrix[np.ix_(c, c)])


def hasse_edges(r: Relation) -> list[tuple[int, int]]:
    """Covering pairs: transitive reduction of the strict part of a partial order."""
    require_partial_order(r)
    s = strict_part(r).matrix
    two = (s.astype(np.int64) @ s.astype(np.int64)) > 0
    return [(int(i), int(j)) for i, j in np.argwhere(s & ~two)]


def to_dot(r: Relation, name: str = "hasse") -> str:
    """Hasse diagram of a partial order; preorders are drawn on their classes."""
    c = classify(r)
    if c.is_preorder and not c.antisymmetric:
        r = condensation(r)[1]
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, lab in enumerate(r.universe.labels):
        lines.append(f'  n{i} [label="{_dot_escape(lab)}"];')
    for i, j in hasse_edges(r):
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def chain_summary(r: Relation) -> str:
    """``"0~1 < 2~3"`` for a linear preorder; cover relations otherwise."""
    labels = r.universe.labels
    c = classify(r)
    if c.is_linear_preorder:
        below = r.matrix.sum(axis=0)  # elements <= x
        levels: dict[int, list[int]] = {}
        for x in range(r.n):
            levels.setdefault(int(below[x]), []).append(x)
        return " < ".join("~".join(labels[x] for x in xs) for _, xs in sorted(levels.items()))
    if c.is_preorder:
        cls, q = condensation(r)
        edges = hasse_edges(q)
        parts = [f"{q.universe.labels[i]} < {q.universe.labels[j]}" for i, j in edges]
        isolated = [q.universe.labels[i] for i in range(q.n) if not any(i in e for e in edges)]
        return ", ".join(parts + isolated)
    return ", ".join(f"{labels[i]} <= {labels[j]}" for i, j in r.pairs())

