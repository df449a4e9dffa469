"""Finite group actions presented by generator permutations.

A group is represented by its image in the symmetric group of the universe.
Every statement about orders, invariance and orbit equivalence depends only
on how elements act, so nothing is lost by this.  Group elements remember
a generator word for diagnostics; equality is equality of permutations.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .config import LIMITS
from .errors import CapExceeded, InvalidRelation, NonAbelianError, NotABijection, WellDefinednessError
from .relations import Relation, Universe


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise NotABijection(f"{list(images)} is not a bijection on {len(images)} points")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        images = list(range(n))
        for cyc in cycles:
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(tuple(images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(x) = p(q(x))
        return Permutation(tuple(self.images[i] for i in other.images))

    def __pow__(self, k: int) -> Permutation:
        result = Permutation.identity(self.n)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = result * base
        return result

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        k, p = 1, self
        while not p.is_identity():
            p = p * self
            k += 1
        return k

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.n):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "e"


@dataclass(frozen=True, eq=False)
class GroupElem:
    perm: Permutation
    word: tuple[int, ...] = ()  # generator indices, leftmost factor first

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElem):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)

    def __call__(self, x: int) -> int:
        return self.perm.images[x]

    def exponents(self, ngens: int) -> tuple[int, ...]:
        counts = [0] * ngens
        for i in self.word:
            counts[i] += 1
        return tuple(counts)

    def word_str(self, names: Sequence[str]) -> str:
        return "*".join(names[i] for i in self.word) or "e"


def evaluate_word(word: Sequence[int], generators: Sequence[Permutation], n: int) -> Permutation:
    p = Permutation.identity(n)
    for i in word:
        p = p * generators[i]
    return p


@dataclass(frozen=True)
class PermAction:
    universe: Universe
    generator_names: tuple[str, ...]
    generators: tuple[Permutation, ...]
    elements: tuple[GroupElem, ...]
    abelian: bool

    @property
    def n(self) -> int:
        return self.universe.size

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[Permutation, int]:
        return {g.perm: i for i, g in enumerate(self.elements)}

    @cached_property
    def perm_array(self) -> np.ndarray:
        return np.array([g.perm.images for g in self.elements], dtype=np.int64).reshape(self.order, self.n)

    @cached_property
    def generator_array(self) -> np.ndarray:
        return np.array([g.images for g in self.generators], dtype=np.int64).reshape(len(self.generators), self.n)

    @cached_property
    def mult_table(self) -> np.ndarray:
        """``mult_table[i, j]`` is the index of ``elements[i] * elements[j]``."""
        idx = self.index
        t = np.empty((self.order, self.order), dtype=np.int64)
        for i, a in enumerate(self.elements):
            for j, b in enumerate(self.elements):
                t[i, j] = idx[a.perm * b.perm]
        return t

    @property
    def identity_index(self) -> int:
        return 0

    def element(self, perm: Permutation) -> GroupElem:
        return self.elements[self.index[perm]]

    def require_abelian(self) -> None:
        if not self.abelian:
            raise NonAbelianError("operation requires an abelian group")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": list(self.universe.labels),
            "generators": [{"name": nm, "map": list(g.images)} for nm, g in zip(self.generator_names, self.generators)],
            "allowNonabelian": not self.abelian,
        }

    @classmethod
    def from_json(cls, data: dict | str) -> PermAction:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            n = int(data["n"])
            gens = [(str(g.get("name", f"g{i}")), [int(v) for v in g["map"]]) for i, g in enumerate(data.get("generators", []))]
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise InvalidRelation(f"malformed action JSON: {exc}") from exc
        universe = Universe(n, tuple(data.get("labels") or ()))
        for name, images in gens:
            if len(images) != n:
                raise NotABijection(f"generator {name} has {len(images)} images, universe has {n}")
        return generate_group(
            universe,
            [Permutation(tuple(images)) for _, images in gens],
            names=[name for name, _ in gens],
            allow_nonabelian=bool(data.get("allowNonabelian", False)),
        )

    def __str__(self) -> str:
        gens = ", ".join(f"{nm}={g}" for nm, g in zip(self.generator_names, self.generators))
        return f"<{gens}> on {self.n} points, |G|={self.order}"


def generate_group(
    universe: Universe | int,
    gens: Iterable[Permutation | Sequence[int]],
    names: Sequence[str] | None = None,
    allow_nonabelian: bool = False,
    cap: int | None = None,
) -> PermAction:
    if isinstance(universe, int):
        universe = Universe(universe)
    n = universe.size
    gens = tuple(g if isinstance(g, Permutation) else Permutation(tuple(g)) for g in gens)
    for g in gens:
        if g.n != n:
            raise NotABijection(f"generator on {g.n} points, universe has {n}")
    names = tuple(names) if names is not None else tuple(f"g{i}" for i in range(len(gens)))
    if len(names) != len(gens) or len(set(names)) != len(names):
        raise InvalidRelation("generator names must be distinct, one per generator")
    abelian = all(a * b == b * a for a in gens for b in gens)
    if not abelian and not allow_nonabelian:
        raise NonAbelianError("generators do not commute")
    cap = LIMITS.group_order if cap is None else cap

    ident = Permutation.identity(n)
    elements = [GroupElem(ident, ())]
    seen = {ident}
    head = 0
    while head < len(elements):
        cur = elements[head]
        head += 1
        for i, g in enumerate(gens):
            p = cur.perm * g
            if p not in seen:
                seen.add(p)
                elements.append(GroupElem(p, cur.word + (i,)))
                if len(elements) > cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
    return PermAction(universe, names, gens, tuple(elements), abelian)


def cyclic_action(n: int, *cycles: Sequence[int], name: str = "g") -> PermAction:
    """Group generated by a single permutation given in cycle notation."""
    return generate_group(n, [Permutation.from_cycles(n, *cycles)], names=[name])


def trivial_action(n: int) -> PermAction:
    return generate_group(n, [])


# -- orbit structure ---------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceClasses:
    universe: Universe
    representatives: tuple[int, ...]  # smallest member of each element's class

    def __post_init__(self):
        reps = self.representatives
        if len(reps) != self.universe.size or any(reps[r] != r for r in reps):
            raise InvalidRelation("representative map must be idempotent")

    @classmethod
    def from_relation(cls, r: Relation) -> EquivalenceClasses:
        from .relations import classify

        if not classify(r).is_equivalence:
            raise InvalidRelation("not an equivalence relation")
        return cls(r.universe, tuple(int(np.flatnonzero(r.matrix[x])[0]) for x in range(r.n)))

    @cached_property
    def class_reps(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.representatives)))

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        pos = {r: i for i, r in enumerate(self.class_reps)}
        return tuple(pos[r] for r in self.representatives)

    def classes(self) -> list[frozenset[int]]:
        out: dict[int, set[int]] = {r: set() for r in self.class_reps}
        for x, r in enumerate(self.representatives):
            out[r].add(x)
        return [frozenset(out[r]) for r in self.class_reps]

    def to_relation(self) -> Relation:
        r = np.asarray(self.representatives)
        return Relation(self.universe, r[:, None] == r[None, :])

    def labels(self) -> tuple[str, ...]:
        lab = self.universe.labels
        return tuple("~".join(lab[x] for x in sorted(c)) for c in self.classes())


def orbits(a: PermAction) -> EquivalenceClasses:
    reps = list(range(a.n))
    for x in range(a.n):
        reps[x] = min(int(p[x]) for p in a.perm_array)
    return EquivalenceClasses(a.universe, tuple(reps))


def element_orbit(g: GroupElem | Permutation, x: int) -> frozenset[int]:
    perm = g.perm if isinstance(g, GroupElem) else g
    out = {x}
    y = perm(x)
    while y != x:
        out.add(y)
        y = perm(y)
    return frozenset(out)


def finite_orbit_witness(a: PermAction) -> tuple[GroupElem, frozenset[int]] | None:
    """First element with an orbit of size > 1, scanning elements then points."""
    for g in a.elements:
        for x in range(a.n):
            orb = element_orbit(g, x)
            if len(orb) > 1:
                return g, orb
    return None


def condition_no_finite_orbits(a: PermAction) -> bool:
    return finite_orbit_witness(a) is None


def acts_trivially(a: PermAction) -> bool:
    """Shortcut for :func:`condition_no_finite_orbits` on finite universes:
    every orbit of a permutation of a finite set is finite."""
    return all(g.is_identity() for g in a.generators)


def sim_g(a: PermAction) -> Relation:
    """``x ~ y`` iff some g has ``g(y) == x`` and ``g^k(y) == y`` for some k >= 1."""
    m = np.zeros((a.n, a.n), dtype=bool)
    for g in a.elements:
        order = g.perm.order()
        for y in range(a.n):
            x = g(y)
            z = y
            for _ in range(order):
                z = g(z)
                if z == y:
                    m[x, y] = True
                    break
    return Relation(a.universe, m)


def quotient_action(a: PermAction, classes: EquivalenceClasses) -> PermAction:
    """Action on the classes of an invariant equivalence, ``g[x] = [gx]``.

    Raises :class:`WellDefinednessError` when some generator does not map
    classes to classes.
    """
    if classes.universe.size != a.n:
        raise WellDefinednessError("classes and action live on different universes")
    cidx = classes.class_index
    k = len(classes.class_reps)
    gens = []
    for name, g in zip(a.generator_names, a.generators):
        images = [-1] * k
        for x in range(a.n):
            c, d = cidx[x], cidx[g(x)]
            if images[c] < 0:
                images[c] = d
            elif images[c] != d:
                raise WellDefinednessError(f"generator {name} splits class of {a.universe.labels[x]}")
        try:
            gens.append(Permutation(tuple(images)))
        except Exception as exc:
            raise WellDefinednessError(f"generator {name} does not permute the classes") from exc
    return generate_group(Universe(k, classes.labels()), gens, names=a.generator_names, allow_nonabelian=not a.abelian)


def powerset_masks(n: int) -> list[int]:
    """All subsets of ``range(n)`` as bitmasks, by (cardinality, mask)."""
    return sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))


def subset_label(mask: int, labels: Sequence[str]) -> str:
    if mask == 0:
        return "∅"
    return "{" + ",".join(labels[i] for i in range(len(labels)) if mask >> i & 1) + "}"


def powerset_action(a: PermAction, cap: int | None = None) -> PermAction:
    cap = LIMITS.powerset_base if cap is None else cap
    if a.n > cap:
        raise CapExceeded(f"powerset of {a.n} points exceeds cap {cap}")
    masks = powerset_masks(a.n)
    pos = {m: i for i, m in enumerate(masks)}
    universe = Universe(len(masks), tuple(subset_label(m, a.universe.labels) for m in masks))
    gens = []
    for g in a.generators:
        images = []
        for m in masks:
            img = 0
            for i in range(a.n):
                if m >> i & 1:
                    img |= 1 << g(i)
            images.append(pos[img])
        gens.append(Permutation(tuple(images)))
    return generate_group(universe, gens, names=a.generator_names, allow_nonabelian=not a.abelian)


def subset_inclusion(n: int) -> Relation:
    """Inclusion order on the powerset universe of :func:`powerset_action`."""
    masks = np.array(powerset_masks(n))
    m = (masks[:, None] & ~masks[None, :]) == 0
    return Relation(len(masks), m)


# -- exponent bookkeeping for collapsing orbit classes -----------------------

# Net (f, g, h) exponents of the four elements that all move y to x.
COLLAPSE_FACTORS = {
    "fg": lambda m, n, p: (1, 1, 0),
    "fg^(1-n)": lambda m, n, p: (1, 1 - n, 0),
    "f^(1-m)gh^-1": lambda m, n, p: (1 - m, 1, -1),
    "fgh^p": lambda m, n, p: (1, 1, p),
}


def collapse_exponents(m: int, n: int, p: int) -> tuple[int, int, int, int]:
    """Multiplicities whose weighted product of the four factors is trivial
    in the free abelian group on f, g, h (requires m, n >= 3 for the first to
    be non-negative)."""
    return (m * (n - 1) * p - n * (p + 1), m * p, n * p, n)


def collapse_net_exponents(m: int, n: int, p: int) -> tuple[int, int, int]:
    mult = collapse_exponents(m, n, p)
    total = [0, 0, 0]
    for k, fac in zip(mult, COLLAPSE_FACTORS.values()):
        for i, e in enumerate(fac(m, n, p)):
            total[i] += k * e
    return tuple(total)
