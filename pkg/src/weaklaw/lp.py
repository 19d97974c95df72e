"""Exact rational feasibility LP (phase-one simplex, Bland's rule) with
replayable infeasibility certificates, and V-represented rational polytopes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

LE, GE, EQ = "<=", ">=", "=="


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple
    sense: str
    rhs: Fraction

    @classmethod
    def make(cls, coeffs: Iterable, sense: str, rhs) -> "Constraint":
        if sense not in (LE, GE, EQ):
            raise ValueError(f"unknown constraint sense {sense!r}")
        return cls(tuple(Fraction(c) for c in coeffs), sense, Fraction(rhs))


@dataclass(frozen=True)
class LPResult:
    feasible: bool
    point: tuple | None = None
    certificate: tuple | None = None


def lp_feasible(constraints: Sequence[Constraint], nvars: int, nonneg: Sequence[bool] | None = None) -> LPResult:
    """Decide whether the linear system has a rational solution.

    Variables are free unless flagged in `nonneg`. An infeasible system
    comes with multipliers y, one per constraint, that `replay_certificate`
    checks without trusting this solver.
    """
    nonneg = list(nonneg) if nonneg is not None else [False] * nvars
    # standard form: columns for x+ (and x- for free vars), then slacks
    cols: list[tuple[int, int]] = []
    for j in range(nvars):
        cols.append((j, 1))
        if not nonneg[j]:
            cols.append((j, -1))
    nslack = sum(1 for c in constraints if c.sense != EQ)
    m = len(constraints)
    n = len(cols) + nslack
    rows, signs = [], []
    slack = len(cols)
    for c in constraints:
        row = [c.coeffs[j] * s for j, s in cols] + [Fraction(0)] * nslack
        if c.sense == LE:
            row[slack] = Fraction(1)
            slack += 1
        elif c.sense == GE:
            row[slack] = Fraction(-1)
            slack += 1
        sign = -1 if c.rhs < 0 else 1
        rows.append([v * sign for v in row] + [c.rhs * sign])
        signs.append(sign)
    # artificial columns n .. n+m-1, rhs last
    tab = [row[:n] + [Fraction(int(i == k)) for k in range(m)] + [row[n]] for i, row in enumerate(rows)]
    basis = [n + i for i in range(m)]
    width = n + m
    cost = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    obj = cost[:]
    for i in range(m):
        obj = [o - t for o, t in zip(obj, tab[i])]
    while True:
        enter = next((j for j in range(width) if obj[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:  # cannot happen in phase one (bounded below by 0)
            raise ArithmeticError("unbounded phase-one problem")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter]:
                factor = tab[i][enter]
                tab[i] = [a - factor * b for a, b in zip(tab[i], tab[leave])]
        if obj[enter]:
            factor = obj[enter]
            obj = [a - factor * b for a, b in zip(obj, tab[leave])]
        basis[leave] = enter
    if -obj[-1] != 0:
        # reduced cost of artificial i is 1 - pi_i
        pi = [1 - obj[n + i] for i in range(m)]
        y = tuple(-pi[i] * signs[i] for i in range(m))
        return LPResult(False, certificate=y)
    values = [Fraction(0)] * width
    for i, b in enumerate(basis):
        values[b] = tab[i][-1]
    point = [Fraction(0)] * nvars
    for k, (j, s) in enumerate(cols):
        point[j] += s * values[k]
    return LPResult(True, point=tuple(point))


def replay_certificate(constraints: Sequence[Constraint], nvars: int, nonneg: Sequence[bool] | None, y: Sequence) -> bool:
    """Check a Farkas certificate: the y-combination of the constraints
    yields 0 <= (negative number) for every admissible x."""
    nonneg = list(nonneg) if nonneg is not None else [False] * nvars
    if len(y) != len(constraints):
        return False
    for yi, c in zip(y, constraints):
        if c.sense == LE and yi < 0:
            return False
        if c.sense == GE and yi > 0:
            return False
    for j in range(nvars):
        col = sum(yi * c.coeffs[j] for yi, c in zip(y, constraints))
        if nonneg[j] and col < 0:
            return False
        if not nonneg[j] and col != 0:
            return False
    return sum(yi * c.rhs for yi, c in zip(y, constraints)) < 0


def convex_combination_constraints(point: Sequence, vertices: Sequence[Sequence]) -> list[Constraint]:
    """point = sum_k theta_k v_k with theta >= 0 summing to 1 (theta are the variables)."""
    k = len(vertices)
    out = [Constraint.make([1] * k, EQ, 1)]
    for i in range(len(point)):
        out.append(Constraint.make([v[i] for v in vertices], EQ, point[i]))
    return out


def in_hull(point: Sequence, vertices: Sequence[Sequence]) -> bool:
    if not vertices:
        return False
    if any(tuple(point) == tuple(v) for v in vertices):
        return True
    cons = convex_combination_constraints(point, vertices)
    return lp_feasible(cons, len(vertices), [True] * len(vertices)).feasible


def _frac_vec(v) -> tuple:
    return tuple(Fraction(c) for c in v)


@dataclass(frozen=True, init=False)
class PolytopeQ:
    """Convex hull of finitely many rational points; vertices are kept
    irredundant and sorted, so equal polytopes compare equal."""

    dim: int
    vertices: tuple

    def __init__(self, dim: int, points: Iterable = (), prune: bool = True):
        pts = sorted({_frac_vec(p) for p in points})
        if any(len(p) != dim for p in pts):
            raise ValueError("point of the wrong dimension")
        if prune and len(pts) > 1:
            keep = list(pts)
            for p in pts:
                others = [q for q in keep if q != p]
                if others and in_hull(p, others):
                    keep = others
            pts = keep
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "vertices", tuple(pts))

    @property
    def empty(self) -> bool:
        return not self.vertices

    def contains(self, point) -> bool:
        return in_hull(_frac_vec(point), self.vertices)

    def includes(self, other: "PolytopeQ") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def same_set(self, other: "PolytopeQ") -> bool:
        return self.includes(other) and other.includes(self)

    def barycenter(self, weights: Sequence) -> tuple:
        return tuple(sum(Fraction(w) * v[i] for w, v in zip(weights, self.vertices)) for i in range(self.dim))


def minkowski(weights: Sequence, polys: Sequence[PolytopeQ]) -> PolytopeQ:
    """sum_i w_i P_i for nonnegative weights; vertices among sums of vertices."""
    dim = polys[0].dim
    if any(p.empty for p in polys):
        return PolytopeQ(dim)
    pts = []
    for choice in product(*(p.vertices for p in polys)):
        pts.append(tuple(sum(Fraction(w) * v[i] for w, v in zip(weights, choice)) for i in range(dim)))
    return PolytopeQ(dim, pts)
