"""Monads on finite sets: powerset variants, finite distributions,
multisets and lists, each with bounded enumeration and sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Any, Callable, Iterable, Iterator, Sequence

from .finrel import FinFun, FinSet, Square, ValidationError, ckey, csorted, near_pullback_gap
from .verdict import Budget, Sweep, Verdict, inconclusive


class Dist:
    """Finitely supported probability distribution with rational weights."""

    __slots__ = ("_items", "_hash")

    def __init__(self, weights):
        acc: dict = {}
        for x, w in dict(weights).items():
            w = Fraction(w)
            if w < 0:
                raise ValidationError(f"negative weight {w} on {x!r}")
            if w:
                acc[x] = acc.get(x, 0) + w
        if sum(acc.values()) != 1:
            raise ValidationError(f"weights sum to {sum(acc.values())}, not 1")
        self._items = tuple(sorted(acc.items(), key=lambda kv: ckey(kv[0])))
        self._hash = hash(("Dist", self._items))

    @classmethod
    def delta(cls, x) -> "Dist":
        return cls({x: 1})

    def items(self) -> tuple:
        return self._items

    @property
    def support(self) -> frozenset:
        return frozenset(x for x, _ in self._items)

    def __getitem__(self, x) -> Fraction:
        for y, w in self._items:
            if y == x:
                return w
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Dist) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (4, len(self._items), tuple((ckey(x), w) for x, w in self._items))

    def __repr__(self) -> str:
        return "Dist({" + ", ".join(f"{x!r}: {w}" for x, w in self._items) + "})"


class Multiset:
    """Finite multiset with positive integer multiplicities."""

    __slots__ = ("_items", "_hash")

    def __init__(self, counts=()):
        acc: dict = {}
        pairs = counts.items() if isinstance(counts, dict) else ((x, 1) for x in counts)
        for x, n in pairs:
            if n < 0:
                raise ValidationError(f"negative multiplicity on {x!r}")
            if n:
                acc[x] = acc.get(x, 0) + n
        self._items = tuple(sorted(acc.items(), key=lambda kv: ckey(kv[0])))
        self._hash = hash(("Multiset", self._items))

    def items(self) -> tuple:
        return self._items

    @property
    def size(self) -> int:
        return sum(n for _, n in self._items)

    @property
    def support(self) -> frozenset:
        return frozenset(x for x, _ in self._items)

    def __getitem__(self, x) -> int:
        for y, n in self._items:
            if y == x:
                return n
        return 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Multiset) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (5, self.size, tuple((ckey(x), n) for x, n in self._items))

    def __repr__(self) -> str:
        return "Multiset({" + ", ".join(f"{x!r}: {n}" for x, n in self._items) + "})"


@dataclass(frozen=True)
class MonadSpec:
    """A monad on finite sets given by its action on elements.

    `exact` says whether `enumerate` lists the whole carrier T(X); for the
    others it lists the part inside the budget.
    """

    name: str
    kind: str
    fmap: Callable[[Callable, Any], Any]
    unit: Callable[[Any], Any]
    mult: Callable[[Any], Any]
    enumerate: Callable[[Sequence, Budget | None], Iterator]
    sample: Callable[[Callable[[], Any], random.Random, Budget], Any]
    exact: bool
    support: Callable[[Any], frozenset]

    def __repr__(self) -> str:
        return f"MonadSpec({self.name})"


# powerset family


def subsets(xs: Iterable, nonempty: bool = False) -> Iterator[frozenset]:
    xs = csorted(set(xs))
    for k in range(1 if nonempty else 0, len(xs) + 1):
        for c in combinations(xs, k):
            yield frozenset(c)


def _p_fmap(f, e):
    return frozenset(f(x) for x in e)


def _p_unit(x):
    return frozenset((x,))


def _p_mult(ee):
    return frozenset().union(*ee)


def _pstar_mult(ee):
    if not ee or any(not e for e in ee):
        raise ValidationError("nonempty powerset: empty set is not an element")
    return _p_mult(ee)


def _p_enum(X, budget=None):
    return subsets(X)


def _pstar_enum(X, budget=None):
    return subsets(X, nonempty=True)


def _p_sample(draw, rng, budget):
    return frozenset(draw() for _ in range(rng.randint(0, budget.maxlen)))


def _pstar_sample(draw, rng, budget):
    return frozenset(draw() for _ in range(rng.randint(1, budget.maxlen)))


def _p_support(e):
    return frozenset(e)


P = MonadSpec("P", "powerset", _p_fmap, _p_unit, _p_mult, _p_enum, _p_sample, True, _p_support)
PSTAR = MonadSpec("P*", "powerset", _p_fmap, _p_unit, _pstar_mult, _pstar_enum, _pstar_sample, True, _p_support)
PF = MonadSpec("Pf", "powerset", _p_fmap, _p_unit, _p_mult, _p_enum, _p_sample, True, _p_support)


# finite distributions


def _d_fmap(f, d):
    acc: dict = {}
    for x, w in d.items():
        y = f(x)
        acc[y] = acc.get(y, 0) + w
    return Dist(acc)


def _d_mult(dd):
    acc: dict = {}
    for inner, w in dd.items():
        for x, v in inner.items():
            acc[x] = acc.get(x, 0) + w * v
    return Dist(acc)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def _d_enum(X, budget=None):
    den = (budget or Budget()).maxden
    xs = csorted(set(X))
    found = set()
    for k in range(1, min(len(xs), den) + 1):
        for supp in combinations(xs, k):
            for comp in compositions(den, k):
                if all(comp):
                    found.add(Dist({x: Fraction(c, den) for x, c in zip(supp, comp)}))
    return iter(csorted(found))


def _d_sample(draw, rng, budget):
    den = budget.maxden
    acc: dict = {}
    for _ in range(den):
        x = draw()
        acc[x] = acc.get(x, 0) + Fraction(1, den)
    return Dist(acc)


def _d_support(d):
    return d.support


D = MonadSpec("D", "distribution", _d_fmap, Dist.delta, _d_mult, _d_enum, _d_sample, False, _d_support)


# multisets


def _m_fmap(f, m):
    acc: dict = {}
    for x, n in m.items():
        y = f(x)
        acc[y] = acc.get(y, 0) + n
    return Multiset(acc)


def _m_unit(x):
    return Multiset({x: 1})


def _m_mult(mm):
    acc: dict = {}
    for inner, n in mm.items():
        for x, k in inner.items():
            acc[x] = acc.get(x, 0) + n * k
    return Multiset(acc)


def _m_enum(X, budget=None):
    maxlen = (budget or Budget()).maxlen
    xs = csorted(set(X))
    found = set()
    for size in range(maxlen + 1):
        for comp in compositions(size, len(xs)):
            found.add(Multiset(dict(zip(xs, comp))))
    return iter(csorted(found))


def _m_sample(draw, rng, budget):
    return Multiset([draw() for _ in range(rng.randint(0, budget.maxlen))])


def _m_support(m):
    return m.support


M = MonadSpec("M", "multiset", _m_fmap, _m_unit, _m_mult, _m_enum, _m_sample, False, _m_support)


# lists


def _l_fmap(f, w):
    return tuple(f(x) for x in w)


def _l_unit(x):
    return (x,)


def _l_mult(ww):
    return tuple(x for w in ww for x in w)


def _l_enum(X, budget=None):
    maxlen = (budget or Budget()).maxlen
    xs = csorted(set(X))
    for n in range(maxlen + 1):
        yield from product(xs, repeat=n)


def _l_sample(draw, rng, budget):
    return tuple(draw() for _ in range(rng.randint(0, budget.maxlen)))


def _l_support(w):
    return frozenset(w)


L = MonadSpec("L", "list", _l_fmap, _l_unit, _l_mult, _l_enum, _l_sample, False, _l_support)


# lists of length at most one (the option monad); a degenerate strict case


def _opt_enum(X, budget=None):
    yield ()
    for x in csorted(set(X)):
        yield (x,)


def _opt_sample(draw, rng, budget):
    return (draw(),) if rng.random() < 0.75 else ()


OPT = MonadSpec("Opt", "option", _l_fmap, _l_unit, _l_mult, _opt_enum, _opt_sample, True, _l_support)


MONADS = {m.name: m for m in (P, PSTAR, PF, D, M, L, OPT)}


def monad(name: str) -> MonadSpec:
    try:
        return MONADS[name]
    except KeyError:
        raise ValidationError(f"unknown monad {name!r}; known: {sorted(MONADS)}") from None


def enumerate_T(T: MonadSpec, X: Iterable, budget: Budget | None = None) -> list:
    """The carrier T(X), or its part inside `budget` when T is infinite."""
    return list(T.enumerate(list(X), budget))


def tower(monads: Sequence[MonadSpec], X: Iterable, budget: Budget | None = None) -> tuple[list, bool]:
    """Elements of T1 T2 ... Tn X (innermost last) and whether the list is complete."""
    level = list(X)
    exact = True
    for T in reversed(monads):
        level = enumerate_T(T, level, budget)
        exact = exact and T.exact
    return level, exact


def draw_tower(monads: Sequence[MonadSpec], X: Sequence, rng: random.Random, budget: Budget) -> Any:
    def at(depth: int):
        if depth == len(monads):
            return rng.choice(list(X))
        return monads[depth].sample(lambda: at(depth + 1), rng, budget)

    return at(0)


def tower_inputs(monads, X, budget: Budget, limit: int = 70000) -> tuple[Iterator, bool]:
    """Inputs for a check on T1...Tn X: the full sweep when it is small
    enough (or no bigger than the requested sample), otherwise
    `budget.samples` seeded random draws."""
    X = csorted(set(X))
    size = estimate_tower(monads, len(X), budget)
    if size <= limit and (budget.samples is None or size <= budget.samples):
        elems, exact = tower(monads, X, budget)
        return iter(elems), exact
    rng = random.Random(budget.seed)
    n = budget.samples or 200
    return (draw_tower(monads, X, rng, budget) for _ in range(n)), False


def estimate_tower(monads, n: int, budget: Budget) -> float:
    size = float(n)
    for T in reversed(monads):
        size = _estimate(T, size, budget)
        if size > 1e12:
            return float("inf")
    return size


def _estimate(T: MonadSpec, n: float, budget: Budget) -> float:
    from math import comb

    if n > 60 and T.kind in ("powerset",):
        return float("inf")
    if T.kind == "powerset":
        return 2.0**n
    if T.kind == "distribution":
        n = int(n)
        return float(sum(comb(n, k) * comb(budget.maxden - 1, k - 1) for k in range(1, min(n, budget.maxden) + 1)))
    if T.kind == "multiset":
        return float(comb(int(n) + budget.maxlen, budget.maxlen))
    if T.kind == "option":
        return n + 1
    return float(sum(n**k for k in range(budget.maxlen + 1)))


# laws of a single monad


def check_monad_laws(T: MonadSpec, X: Iterable, budget: Budget | None = None) -> dict[str, Verdict]:
    budget = budget or Budget()
    X = csorted(set(X))
    out = {}

    inputs, exact = tower_inputs([T], X, budget)
    left, right = Sweep(exact, budget), Sweep(exact, budget)
    for t in inputs:
        left.checked += 1
        right.checked += 1
        if left.witness is None and T.mult(T.unit(t)) != t:
            left.fail({"input": t})
        if right.witness is None and T.mult(T.fmap(T.unit, t)) != t:
            right.fail({"input": t})
    out["left_unit"] = left.verdict()
    out["right_unit"] = right.verdict()

    inputs, exact = tower_inputs([T, T, T], X, budget)
    assoc = Sweep(exact, budget)
    for t in inputs:
        assoc.checked += 1
        if T.mult(T.mult(t)) != T.mult(T.fmap(T.mult, t)):
            assoc.fail({"input": t})
            break
    out["associativity"] = assoc.verdict()
    return out


# weak cartesianness of the monad structure


def mult_square(T: MonadSpec, f: FinFun, budget: Budget | None = None) -> Square:
    """The naturality square of the multiplication at `f`, on bounded carriers."""
    TTX, _ = tower([T, T], f.dom.elems, budget)
    TX = enumerate_T(T, f.dom.elems, budget)
    TTY = set(tower([T, T], f.cod.elems, budget)[0])
    TY = set(enumerate_T(T, f.cod.elems, budget))
    TX_set = set(TX) | {T.mult(t) for t in TTX}
    TTY |= {T.fmap(lambda s: T.fmap(f, s), t) for t in TTX}
    TY |= {T.mult(t) for t in TTY} | {T.fmap(f, t) for t in TX_set}
    apex, y1, y2, z = FinSet(TTX), FinSet(TTY), FinSet(TX_set), FinSet(TY)
    return Square(
        FinFun(apex, y1, lambda t: T.fmap(lambda s: T.fmap(f, s), t)),
        FinFun(apex, y2, T.mult),
        FinFun(y1, z, T.mult),
        FinFun(y2, z, lambda t: T.fmap(f, t)),
    )


def check_nearly_cartesian_instance(T: MonadSpec, f: FinFun, budget: Budget | None = None) -> Verdict:
    """Is the multiplication square at `f` a near pullback (on the bounded carriers)?

    For monads without a finite carrier a missing preimage may lie outside
    the budget, so it only makes the verdict inconclusive.
    """
    budget = budget or Budget()
    sq = mult_square(T, f, budget)
    gap = near_pullback_gap(sq)
    checked = len(sq.f1.dom)
    if gap is None:
        return Sweep(T.exact, budget, checked).verdict()
    witness = {"pullback_pair": gap}
    if T.exact:
        return Sweep(True, budget, checked, witness).verdict()
    return inconclusive(checked, "no preimage inside the enumeration budget", witness)


def check_finite_preimage_preservation(T: MonadSpec, f: FinFun, budget: Budget | None = None) -> Verdict:
    """Kleisli-side finiteness check: the canonical law of T over P, fed
    inputs built from finite subsets of the domain of `f`, only produces
    finite sets. Every finite carrier passes trivially; the check records
    where the finite scale stops being informative.
    """
    from .laws import canonical_law_over_P

    budget = budget or Budget()
    if T.kind == "distribution":
        return inconclusive(0, "preimage sets of D-elements are polytopes; finite carriers cannot exhibit the failure")
    inputs, exact = tower_inputs([T, P], f.dom.elems, budget)
    sweep = Sweep(exact and T.exact, budget)
    for w in inputs:
        sweep.checked += 1
        out = canonical_law_over_P(T, w, budget)
        if not isinstance(out, frozenset):
            sweep.fail({"input": w})
            break
    return sweep.verdict()
