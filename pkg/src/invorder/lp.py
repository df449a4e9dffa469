"""Exact rational linear programming.

Two-phase tableau simplex with Bland's rule over :class:`fractions.Fraction`.
Solves ``minimize c.x  subject to  A x = b, x >= 0`` and returns a basic
(vertex) solution, which is what the certificate constructions want: small,
exact and reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Number = int | Fraction


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple[Fraction, ...] | None = None
    value: Fraction | None = None


def _pivot(T: list[list[Fraction]], r: int, c: int) -> None:
    piv = T[r][c]
    row = T[r] = [v / piv for v in T[r]]
    for i, other in enumerate(T):
        if i != r and other[c] != 0:
            f = other[c]
            T[i] = [a - f * b for a, b in zip(other, row)]


def _run(T, basis, cost, allowed) -> str:
    m = len(T)
    while True:
        basic = set(basis)
        enter = None
        for j in allowed:
            if j in basic:
                continue
            d = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
            if d < 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                key = (T[i][-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, best[1], enter)
        basis[best[1]] = enter


def linprog_exact(c: Sequence[Number], A: Sequence[Sequence[Number]], b: Sequence[Number]) -> LPResult:
    nvar = len(c)
    rows = []
    for ai, bi in zip(A, b):
        row = [Fraction(v) for v in ai] + [Fraction(bi)]
        if len(row) != nvar + 1:
            raise ValueError("constraint row length does not match objective")
        if row[-1] < 0:
            row = [-v for v in row]
        rows.append(row)
    m = len(rows)
    if m == 0:
        if any(Fraction(v) < 0 for v in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in range(nvar)), Fraction(0))

    # phase 1: artificials nvar .. nvar+m-1
    T = [row[:-1] + [Fraction(int(i == k)) for k in range(m)] + [row[-1]] for i, row in enumerate(rows)]
    basis = [nvar + i for i in range(m)]
    cost1 = [Fraction(0)] * nvar + [Fraction(1)] * m
    _run(T, basis, cost1, range(nvar + m))
    if sum(T[i][-1] for i in range(m) if basis[i] >= nvar) > 0:
        return LPResult("infeasible")

    # drive zero-level artificials out of the basis; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if T[i][j] != 0), None)
            if col is None:
                continue
            _pivot(T, i, col)
            basis[i] = col
        keep.append(i)
    T = [T[i][:nvar] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    cost = [Fraction(v) for v in c]
    status = _run(T, basis, cost, range(nvar))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * nvar
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return LPResult("optimal", tuple(x), sum(ci * xi for ci, xi in zip(cost, x)))


def rank(rows: Sequence[Sequence[Number]]) -> int:
    M = [[Fraction(v) for v in r] for r in rows]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r
