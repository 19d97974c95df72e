"""Finite sets, functions and relations, with the few categorical
constructions the checkers need (images, pullbacks, relational extension)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Hashable, Iterable, Iterator, Mapping


class ValidationError(ValueError):
    """Raised when a finite structure is malformed."""


@lru_cache(maxsize=None)
def ckey(x: Hashable) -> tuple:
    """Total order on element values, used for every canonical listing.

    Sets are ordered by size first, then lexicographically on sorted
    members; tuples (words, pairs) shortlex.
    """
    if isinstance(x, bool):
        return (0, int(x))
    if isinstance(x, (int, Fraction)):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, tuple):
        return (2, len(x), tuple(ckey(e) for e in x))
    if isinstance(x, frozenset):
        return (3, len(x), tuple(sorted(ckey(e) for e in x)))
    sort_key = getattr(x, "sort_key", None)
    if sort_key is not None:
        return sort_key()
    raise TypeError(f"no canonical order for {type(x).__name__}")


def csorted(xs: Iterable) -> list:
    return sorted(xs, key=ckey)


@dataclass(frozen=True, init=False)
class FinSet:
    """A finite set with a canonical element order."""

    elems: tuple
    _members: frozenset = field(repr=False, compare=False)

    def __init__(self, elems: Iterable = ()):
        members = frozenset(elems)
        object.__setattr__(self, "elems", tuple(csorted(members)))
        object.__setattr__(self, "_members", members)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator:
        return iter(self.elems)

    def __len__(self) -> int:
        return len(self.elems)

    def __hash__(self) -> int:
        return hash(self.elems)

    def index(self, x) -> int:
        return self.elems.index(x)


@dataclass(frozen=True, init=False)
class FinFun:
    """A total function between finite sets."""

    dom: FinSet
    cod: FinSet
    table: Mapping

    def __init__(self, dom: FinSet, cod: FinSet, table: Mapping | Callable):
        if callable(table) and not isinstance(table, Mapping):
            table = {x: table(x) for x in dom}
        missing = [x for x in dom if x not in table]
        if missing:
            raise ValidationError(f"function undefined on {missing[0]!r}")
        extra = [x for x in table if x not in dom]
        if extra:
            raise ValidationError(f"{extra[0]!r} is not in the domain")
        for x in dom:
            if table[x] not in cod:
                raise ValidationError(f"value {table[x]!r} of {x!r} is not in the codomain")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "table", dict(table))

    def __call__(self, x):
        return self.table[x]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FinFun)
            and self.dom == other.dom
            and self.cod == other.cod
            and all(self(x) == other(x) for x in self.dom)
        )

    def __hash__(self) -> int:
        return hash((self.dom, self.cod, tuple(self(x) for x in self.dom)))

    def then(self, g: "FinFun") -> "FinFun":
        if self.cod != g.dom:
            raise ValidationError("codomain/domain mismatch in composition")
        return FinFun(self.dom, g.cod, {x: g(self(x)) for x in self.dom})

    def is_surjective(self) -> bool:
        return {self(x) for x in self.dom} == set(self.cod)

    def is_injective(self) -> bool:
        return len({self(x) for x in self.dom}) == len(self.dom)


def identity(X: FinSet) -> FinFun:
    return FinFun(X, X, {x: x for x in X})


@dataclass(frozen=True, init=False)
class FinRel:
    """A relation X -/-> Y given by its set of pairs."""

    dom: FinSet
    cod: FinSet
    pairs: frozenset

    def __init__(self, dom: FinSet, cod: FinSet, pairs: Iterable):
        pairs = frozenset((a, b) for a, b in pairs)
        for a, b in pairs:
            if a not in dom or b not in cod:
                raise ValidationError(f"pair {(a, b)!r} is outside {dom.elems} x {cod.elems}")
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "pairs", pairs)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def sorted_pairs(self) -> list:
        return csorted(self.pairs)

    def image_of(self, a) -> set:
        return {b for x, b in self.pairs if x == a}


def graph(f: FinFun) -> FinRel:
    return FinRel(f.dom, f.cod, ((x, f(x)) for x in f.dom))


def dagger(r: FinRel) -> FinRel:
    return FinRel(r.cod, r.dom, ((b, a) for a, b in r.pairs))


def compose_rel(r: FinRel, s: FinRel) -> FinRel:
    """First `r` then `s`: pairs (a, c) with a r b and b s c for some b."""
    if r.cod != s.dom:
        raise ValidationError("relations do not compose: middle sets differ")
    succ: dict = {}
    for b, c in s.pairs:
        succ.setdefault(b, []).append(c)
    return FinRel(r.dom, s.cod, ((a, c) for a, b in r.pairs for c in succ.get(b, ())))


def rel_leq(r: FinRel, s: FinRel) -> bool:
    if r.dom != s.dom or r.cod != s.cod:
        raise ValidationError("relations have different types")
    return r.pairs <= s.pairs


def rel_identity(X: FinSet) -> FinRel:
    return FinRel(X, X, ((x, x) for x in X))


def image_factorize(f: FinFun) -> tuple[FinFun, FinFun]:
    """Split `f` as a surjection onto its image followed by the inclusion."""
    image = FinSet(f(x) for x in f.dom)
    onto = FinFun(f.dom, image, {x: f(x) for x in f.dom})
    incl = FinFun(image, f.cod, {y: y for y in image})
    return onto, incl


def legs(r: FinRel) -> tuple[FinFun, FinFun]:
    """The tabulating span of a relation: apex is the set of pairs."""
    apex = FinSet(r.pairs)
    return (
        FinFun(apex, r.dom, {p: p[0] for p in apex}),
        FinFun(apex, r.cod, {p: p[1] for p in apex}),
    )


def pullback(g1: FinFun, g2: FinFun) -> tuple[FinSet, FinFun, FinFun]:
    if g1.cod != g2.cod:
        raise ValidationError("cospan legs have different codomains")
    apex = FinSet((a, b) for a in g1.dom for b in g2.dom if g1(a) == g2(b))
    return (
        apex,
        FinFun(apex, g1.dom, {p: p[0] for p in apex}),
        FinFun(apex, g2.dom, {p: p[1] for p in apex}),
    )


@dataclass(frozen=True)
class Square:
    """A commuting square f1;g1 = f2;g2 from `apex` to a common corner."""

    f1: FinFun
    f2: FinFun
    g1: FinFun
    g2: FinFun

    def __post_init__(self):
        if self.f1.dom != self.f2.dom:
            raise ValidationError("square legs f1, f2 start at different sets")
        if self.f1.cod != self.g1.dom or self.f2.cod != self.g2.dom:
            raise ValidationError("square sides do not compose")
        if self.g1.cod != self.g2.cod:
            raise ValidationError("square legs g1, g2 end at different sets")
        for x in self.f1.dom:
            if self.g1(self.f1(x)) != self.g2(self.f2(x)):
                raise ValidationError(f"square does not commute at {x!r}")


def near_pullback_gap(sq: Square) -> Any | None:
    """First pullback pair not reached from the apex, or None."""
    reached = {(sq.f1(x), sq.f2(x)) for x in sq.f1.dom}
    apex, _, _ = pullback(sq.g1, sq.g2)
    for pair in apex:
        if pair not in reached:
            return pair
    return None


def is_near_pullback(sq: Square) -> bool:
    return near_pullback_gap(sq) is None


def near_pullback_by_relations(sq: Square) -> bool:
    """Same question, asked as an equation between relations Y1 -/-> Y2."""
    through_corner = compose_rel(graph(sq.g1), dagger(graph(sq.g2)))
    through_apex = compose_rel(dagger(graph(sq.f1)), graph(sq.f2))
    return through_corner == through_apex


class NotEnumerable(ValueError):
    """Raised when an operation needs the full carrier of an infinite functor."""


def relational_extension_apply(T, r: FinRel, budget=None) -> FinRel:
    """Extend the functor `T` to the relation `r`: T(snd) after T(fst)^dagger.

    Only functors with an exact finite enumeration are accepted.
    """
    if not T.exact:
        raise NotEnumerable(f"{T.name} has no finite carrier on finite sets")
    fst, snd = legs(r)
    apex_elems = list(T.enumerate(fst.dom.elems, budget))
    dom = FinSet(T.enumerate(r.dom.elems, budget))
    cod = FinSet(T.enumerate(r.cod.elems, budget))
    pairs = ((T.fmap(fst, t), T.fmap(snd, t)) for t in apex_elems)
    return FinRel(dom, cod, pairs)
