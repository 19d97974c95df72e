"""Convex sets of distributions, kept as irredundant vertex sets."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .finrel import ckey, csorted
from .lp import PolytopeQ
from .monads import Dist


def coordinates(points: Iterable[Dist]) -> tuple[list, list[tuple]]:
    points = list(points)
    axis = csorted({x for p in points for x in p.support})
    return axis, [tuple(p[x] for x in axis) for p in points]


class DistHull:
    """Convex hull of finitely many distributions (possibly empty).

    Vertices are the extreme points, found by exact LP, so two hulls are
    the same set exactly when their vertex sets agree.
    """

    __slots__ = ("vertices", "_hash")

    def __init__(self, points: Iterable[Dist] = ()):
        pts = set(points)
        if len(pts) > 1:
            axis, coords = coordinates(pts)
            poly = PolytopeQ(len(axis), coords)
            pts = {Dist({x: w for x, w in zip(axis, v)}) for v in poly.vertices}
        self.vertices = frozenset(pts)
        self._hash = hash(("DistHull", self.vertices))

    @property
    def empty(self) -> bool:
        return not self.vertices

    def __eq__(self, other) -> bool:
        return isinstance(other, DistHull) and self.vertices == other.vertices

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (6, len(self.vertices), tuple(sorted(ckey(v) for v in self.vertices)))

    def __repr__(self) -> str:
        return "DistHull(" + ", ".join(repr(v) for v in csorted(self.vertices)) + ")"

    def contains(self, point: Dist) -> bool:
        if not self.vertices:
            return False
        if point in self.vertices:
            return True
        axis, coords = coordinates(list(self.vertices) + [point])
        return PolytopeQ(len(axis), coords[:-1], prune=False).contains(coords[-1])

    def includes(self, other: "DistHull") -> bool:
        return all(self.contains(v) for v in other.vertices)

    def same_set(self, other: "DistHull") -> bool:
        """Equality by two-sided LP inclusion (independent of vertex pruning)."""
        return self.includes(other) and other.includes(self)

    def map_affine(self, f) -> "DistHull":
        """Image under a map that commutes with convex combinations."""
        return DistHull(f(v) for v in self.vertices)


def mix(weights: Sequence, hulls: Sequence[DistHull]) -> DistHull:
    """Weighted Minkowski sum sum_i w_i C_i of convex sets of distributions."""
    if any(h.empty for h in hulls):
        return DistHull()
    pts = []
    for choice in product(*(csorted(h.vertices) for h in hulls)):
        acc: dict = {}
        for w, d in zip(weights, choice):
            for x, v in d.items():
                acc[x] = acc.get(x, 0) + Fraction(w) * v
        pts.append(Dist(acc))
    return DistHull(pts)
