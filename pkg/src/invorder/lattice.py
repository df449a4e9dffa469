"""Translation-invariant orders on Z^k.

A :class:`ConeOrder` presents the order ``x <= y  iff  y - x`` is 0 or a
non-negative integer combination of the generators.  Under the translation
action of Z^k on itself, ``x <=_G y`` holds iff some positive multiple of
``y - x`` is such a combination, i.e. iff ``y - x`` lies in the rational cone
spanned by the generators.  Everything here is decided by exact LPs and
returned as certificates that can be checked with integer arithmetic alone.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .config import LIMITS
from .errors import CapExceeded, InvalidRelation, NotPointedError, NotSeparable, UniverseMismatch
from .lp import linprog_exact, rank

IntVector = tuple[int, ...]


def _dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def _frac_str(q: Fraction) -> int | str:
    """Whole numbers as JSON integers, the rest as "p/q" strings."""
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _vec(v: Sequence[int], k: int) -> IntVector:
    out = tuple(int(a) for a in v)
    if len(out) != k:
        raise UniverseMismatch(f"vector of length {len(out)} in dimension {k}")
    return out


@dataclass(frozen=True)
class ConeOrder:
    dim: int
    gens: tuple[IntVector, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise InvalidRelation("dimension must be positive")
        if self.dim > LIMITS.lattice_dim or len(self.gens) > LIMITS.lattice_gens:
            raise CapExceeded(f"cone exceeds caps k <= {LIMITS.lattice_dim}, |S| <= {LIMITS.lattice_gens}")
        gens = tuple(_vec(s, self.dim) for s in self.gens)
        if any(not any(s) for s in gens):
            raise InvalidRelation("zero vector among cone generators")
        object.__setattr__(self, "gens", gens)

    @classmethod
    def from_json(cls, data: dict | str) -> ConeOrder:
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["k"]), tuple(tuple(int(a) for a in s) for s in data.get("gens", [])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidRelation(f"malformed cone JSON: {exc}") from exc

    def to_json(self) -> dict:
        return {"k": self.dim, "gens": [list(s) for s in self.gens]}

    def combine(self, coeffs: Sequence) -> tuple:
        return tuple(sum(c * s[i] for c, s in zip(coeffs, self.gens)) for i in range(self.dim))


# -- certificates ------------------------------------------------------------


@dataclass(frozen=True)
class PositiveWeight:
    """``w . s > 0`` for every generator: the order is antisymmetric."""

    weight: tuple[Fraction, ...]

    def verify(self, cone: ConeOrder) -> bool:
        return len(self.weight) == cone.dim and all(_dot(self.weight, s) > 0 for s in cone.gens)

    def to_json(self) -> dict:
        return {"type": "PositiveWeight", "weight": [_frac_str(v) for v in self.weight]}


@dataclass(frozen=True)
class ZeroCombo:
    """Non-negative integers, not all zero, with ``sum coeffs[i] * gens[i] = 0``."""

    coeffs: tuple[int, ...]

    def verify(self, cone: ConeOrder) -> bool:
        return (
            len(self.coeffs) == len(cone.gens)
            and all(isinstance(c, int) and c >= 0 for c in self.coeffs)
            and any(self.coeffs)
            and not any(cone.combine(self.coeffs))
        )

    def opposite_pair(self, cone: ConeOrder) -> tuple[IntVector, tuple[int, ...], tuple[int, ...]]:
        """``(v, a, b)`` with ``v = a . gens`` and ``-v = b . gens``, both combos non-zero."""
        i = next(i for i, c in enumerate(self.coeffs) if c)
        a = tuple(int(j == i) for j in range(len(self.coeffs)))
        b = tuple(c - a_j for c, a_j in zip(self.coeffs, a))
        return cone.gens[i], a, b

    def to_json(self) -> dict:
        return {"type": "ZeroCombo", "coeffs": list(self.coeffs)}


@dataclass(frozen=True)
class Combo:
    """Non-negative rationals with ``sum coeffs[i] * gens[i] = d``."""

    coeffs: tuple[Fraction, ...]

    def verify(self, cone: ConeOrder, d: Sequence[int]) -> bool:
        return (
            len(self.coeffs) == len(cone.gens)
            and all(c >= 0 for c in self.coeffs)
            and cone.combine(self.coeffs) == tuple(d)
        )

    def to_json(self) -> dict:
        return {"type": "Combo", "coeffs": [_frac_str(v) for v in self.coeffs]}


@dataclass(frozen=True)
class SeparatingWeight:
    """``w . s >= 0`` for every generator and ``w . d < 0``: d is outside the cone."""

    weight: tuple[Fraction, ...]

    def verify(self, cone: ConeOrder, d: Sequence[int]) -> bool:
        return (
            len(self.weight) == cone.dim
            and all(_dot(self.weight, s) >= 0 for s in cone.gens)
            and _dot(self.weight, d) < 0
        )

    def to_json(self) -> dict:
        return {"type": "SeparatingWeight", "weight": [_frac_str(v) for v in self.weight]}


GordanCertificate = PositiveWeight | ZeroCombo
MembershipCertificate = Combo | SeparatingWeight


# -- decisions ----------------------------------------------------------------


def _positive_weight_lp(gens: Sequence[IntVector], k: int) -> tuple[Fraction, tuple[Fraction, ...]]:
    """max eps s.t. w.s >= eps, |w_j| <= 1, eps <= 1 with w = p - q."""
    m = len(gens)
    # columns: p(k) q(k) eps t(m) up(k) uq(k) v
    nv = 4 * k + 2 + m
    eps = 2 * k
    A, b = [], []
    for i, s in enumerate(gens):
        row = [0] * nv
        for j in range(k):
            row[j], row[k + j] = s[j], -s[j]
        row[eps] = -1
        row[eps + 1 + i] = -1
        A.append(row)
        b.append(0)
    base = eps + 1 + m
    for j in range(k):
        for off, col in ((0, j), (k, k + j)):
            row = [0] * nv
            row[col] = 1
            row[base + off + j] = 1
            A.append(row)
            b.append(1)
    row = [0] * nv
    row[eps] = 1
    row[nv - 1] = 1
    A.append(row)
    b.append(1)
    c = [0] * nv
    c[eps] = -1
    res = linprog_exact(c, A, b)
    assert res.status == "optimal"
    x = res.x
    return x[eps], tuple(x[j] - x[k + j] for j in range(k))


def _zero_combo_lp(gens: Sequence[IntVector], k: int) -> tuple[int, ...] | None:
    m = len(gens)
    A = [[s[i] for s in gens] for i in range(k)] + [[1] * m]
    res = linprog_exact([0] * m, A, [0] * k + [1])
    if res.status != "optimal":
        return None
    den = math.lcm(*(q.denominator for q in res.x))
    ints = [int(q * den) for q in res.x]
    g = math.gcd(*ints)
    return tuple(v // g for v in ints)


def gordan_certificate(c: ConeOrder) -> GordanCertificate:
    """PositiveWeight if the generated order is antisymmetric, else ZeroCombo."""
    if not c.gens:
        return PositiveWeight(tuple(Fraction(int(j == 0)) for j in range(c.dim)))
    eps, w = _positive_weight_lp(c.gens, c.dim)
    if eps > 0:
        return PositiveWeight(w)
    combo = _zero_combo_lp(c.gens, c.dim)
    assert combo is not None, "Gordan alternative violated"
    return ZeroCombo(combo)


def _farkas_lp(gens: Sequence[IntVector], d: IntVector, k: int) -> tuple[Fraction, ...] | None:
    """min |w|_1 s.t. w.s >= 0, w.d = -1 with w = p - q."""
    m = len(gens)
    nv = 2 * k + m
    A, b = [], []
    for i, s in enumerate(gens):
        row = [0] * nv
        for j in range(k):
            row[j], row[k + j] = s[j], -s[j]
        row[2 * k + i] = -1
        A.append(row)
        b.append(0)
    row = [0] * nv
    for j in range(k):
        row[j], row[k + j] = d[j], -d[j]
    A.append(row)
    b.append(-1)
    res = linprog_exact([1] * (2 * k) + [0] * m, A, b)
    if res.status != "optimal":
        return None
    return tuple(res.x[j] - res.x[k + j] for j in range(k))


def cone_member(c: ConeOrder, d: Sequence[int]) -> MembershipCertificate:
    """Combo iff ``d`` is in the rational cone of the generators, else a
    separating weight.  With ``d = y - x`` a Combo means ``x <=_G y``."""
    d = _vec(d, c.dim)
    m = len(c.gens)
    if m:
        A = [[s[i] for s in c.gens] for i in range(c.dim)]
        res = linprog_exact([0] * m, A, list(d))
        if res.status == "optimal":
            return Combo(res.x)
    elif not any(d):
        return Combo(())
    w = _farkas_lp(c.gens, d, c.dim)
    assert w is not None, "Farkas alternative violated"
    return SeparatingWeight(w)


def monoid_member_bounded(c: ConeOrder, d: Sequence[int], bound: int) -> tuple[int, ...] | None:
    """Integer coefficients in ``[0, bound]``, not all zero, combining to ``d``.

    A semi-decision for the plain order: None only means nothing was found
    up to ``bound``.  ``d = 0`` is found only via a genuine non-trivial cycle.
    """
    if bound < 1:
        raise InvalidRelation("bound must be at least 1")
    d = _vec(d, c.dim)
    m = len(c.gens)
    if (bound + 1) ** m > LIMITS.monoid_search_nodes:
        raise CapExceeded(f"search space {(bound + 1) ** m} exceeds {LIMITS.monoid_search_nodes}")
    for coeffs in itertools.product(range(bound + 1), repeat=m):
        if any(coeffs) and c.combine(coeffs) == d:
            return coeffs
    return None


# -- weight orders ------------------------------------------------------------


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True)
class WeightOrder:
    """Lexicographic comparison of ``(row . x for row in rows)``; a linear
    order on Z^k because the rows have rank k."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise InvalidRelation("weight rows must be non-empty and of equal length")
        if rank(rows) != len(rows[0]):
            raise InvalidRelation("weight matrix does not have full column rank")

    @property
    def dim(self) -> int:
        return len(self.rows[0])

    def key(self, x: Sequence[int]) -> tuple[Fraction, ...]:
        x = _vec(x, self.dim)
        return tuple(_dot(r, x) for r in self.rows)

    def compare(self, x: Sequence[int], y: Sequence[int]) -> Ordering:
        kx, ky = self.key(x), self.key(y)
        return Ordering((kx > ky) - (kx < ky))

    def to_json(self) -> dict:
        return {"k": self.dim, "rows": [[_frac_str(v) for v in r] for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict | str) -> WeightOrder:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(tuple(Fraction(v) for v in r) for r in data["rows"]))


def weight_compare(w: WeightOrder, x: Sequence[int], y: Sequence[int]) -> Ordering:
    return w.compare(x, y)


def _complete(rows: list[tuple[Fraction, ...]], k: int) -> WeightOrder:
    r = rank(rows)
    for j in range(k):
        if r == k:
            break
        e = tuple(Fraction(int(i == j)) for i in range(k))
        if rank(rows + [e]) > r:
            rows.append(e)
            r += 1
    return WeightOrder(tuple(rows))


def _require_pointed(c: ConeOrder) -> PositiveWeight:
    cert = gordan_certificate(c)
    if isinstance(cert, ZeroCombo):
        raise NotPointedError("cone order is not antisymmetric", witness=cert)
    return cert


def weight_extension(c: ConeOrder) -> WeightOrder:
    """Invariant linear order on Z^k in which every generator is positive."""
    cert = _require_pointed(c)
    return _complete([cert.weight], c.dim)


def separating_extension(c: ConeOrder, x: Sequence[int], y: Sequence[int]) -> WeightOrder:
    """Invariant linear order extending the cone order with ``x < y``.

    Requires ``y <=_G x`` to fail.  Generators tied by the first row are made
    positive by further rows, each a positive weight for the still-tied ones.
    """
    x, y = _vec(x, c.dim), _vec(y, c.dim)
    _require_pointed(c)
    d = tuple(a - b for a, b in zip(x, y))
    cert = cone_member(c, d)
    if isinstance(cert, Combo):
        raise NotSeparable(f"{y} <=_G {x} holds", witness=cert)
    rows = [cert.weight]
    tied = [s for s in c.gens if _dot(cert.weight, s) == 0]
    while tied:
        w = gordan_certificate(ConeOrder(c.dim, tuple(tied)))
        assert isinstance(w, PositiveWeight)
        rows.append(w.weight)
        tied = [s for s in tied if _dot(w.weight, s) == 0]
    return _complete(rows, c.dim)


def certificate_from_json(data: dict) -> PositiveWeight | ZeroCombo | Combo | SeparatingWeight:
    kind = data["type"]
    if kind == "ZeroCombo":
        return ZeroCombo(tuple(int(v) for v in data["coeffs"]))
    if kind in ("Combo",):
        return Combo(tuple(Fraction(v) for v in data["coeffs"]))
    cls = {"PositiveWeight": PositiveWeight, "SeparatingWeight": SeparatingWeight}[kind]
    return cls(tuple(Fraction(v) for v in data["weight"]))
