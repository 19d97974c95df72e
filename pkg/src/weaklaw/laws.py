"""Candidate weak distributive laws TS => ST and their axiom checkers.

Axiom names follow the usual diagrams: "unit-" (unit of T, optional for
weak laws), "unit+" (unit of S), "mult-" (multiplication of T) and
"mult+" (multiplication of S).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Callable, Iterable

from .convex import DistHull, mix
from .finrel import FinFun, NotEnumerable, ValidationError, csorted
from .monads import D, Dist, MonadSpec, Multiset, P, compositions, monad, subsets, tower_inputs
from .verdict import Budget, Status, Sweep, Verdict

AXIOMS = ("unit-", "unit+", "mult-", "mult+")


@lru_cache(maxsize=None)
def distrPP_eval(E: frozenset) -> frozenset:
    """All e' inside the union of E that meet every member of E."""
    union = frozenset().union(*E)
    return frozenset(e for e in subsets(union) if all(e & s for s in E))


def selections(sets):
    """All ways to pick one element from each set, in canonical order."""
    return product(*(csorted(s) for s in sets))


def distrDP_eval(phi: Dist) -> DistHull:
    """Convex set of sum_e phi(e) psi_e with psi_e a distribution on e.

    Its extreme points are among sum_e phi(e) delta(x_e) with x_e in e; an
    empty set in the support leaves nothing to choose, so the result is
    the empty hull.
    """
    support = [e for e, _ in phi.items()]
    weights = [w for _, w in phi.items()]
    pts = []
    for choice in selections(support):
        acc: dict = {}
        for w, x in zip(weights, choice):
            acc[x] = acc.get(x, 0) + w
        pts.append(Dist(acc))
    return DistHull(pts)


def membership_apex(sets: Iterable[frozenset]) -> list[tuple]:
    """The part of the membership span {(S, x) : x in S} over the given sets."""
    return csorted({(s, x) for s in sets for x in s})


def canonical_law_by_filter(T: MonadSpec, w, budget: Budget | None = None) -> frozenset:
    """{T(snd)(t) : t in T(apex), T(fst)(t) = w} for the membership span,
    by enumerating T over the whole apex. Exponential in the apex size."""
    if T.kind == "distribution":
        raise NotEnumerable("D has no finite fibres over the membership span; use distrDP")
    apex = membership_apex(T.support(w))
    if T.kind == "powerset":
        candidates = T.enumerate(apex, None)
    else:
        size = w.size if T.kind == "multiset" else len(w)
        candidates = T.enumerate(apex, Budget(maxlen=max(size, 1)))

    def fst(p):
        return p[0]

    def snd(p):
        return p[1]

    return frozenset(T.fmap(snd, t) for t in candidates if T.fmap(fst, t) == w)


def canonical_law_over_P(T: MonadSpec, w, budget: Budget | None = None) -> frozenset:
    """The monotone law T P => P T obtained from the relational extension
    of T along the membership span, evaluated at one element.

    The fibre of T(fst) over w is built directly: every occurrence of a set
    S in w is paired with members of S (at least one, for the powerset
    monads), and the result collects the second components.
    """
    if T.kind == "distribution":
        raise NotEnumerable("D has no finite fibres over the membership span; use distrDP")
    if T.kind == "powerset":
        acc = {frozenset()}
        for S in csorted(w):
            acc = {u | c for u in acc for c in subsets(S, nonempty=True)}
        return frozenset(acc)
    if T.kind in ("list", "option"):
        return frozenset(product(*(csorted(S) for S in w)))
    if T.kind == "multiset":
        acc = {Multiset()}
        for S, k in w.items():
            choices = [Multiset(dict(zip(csorted(S), comp))) for comp in compositions(k, len(S))]
            acc = {add_multisets(u, c) for u in acc for c in choices}
        return frozenset(acc)
    raise NotEnumerable(f"no canonical law for {T.name}")


def add_multisets(a: Multiset, b: Multiset) -> Multiset:
    acc = dict(a.items())
    for x, n in b.items():
        acc[x] = acc.get(x, 0) + n
    return Multiset(acc)


@dataclass(frozen=True)
class LawSpec:
    """A law TS => ST with S a powerset monad, given elementwise by `rho`."""

    name: str
    T: MonadSpec
    S: MonadSpec
    rho: Callable[[Any], Any]

    def __call__(self, w):
        return self.rho(w)

    # S-side operations on values of the law
    def s_unit(self, x):
        return self.S.unit(x)

    def s_map(self, g, s):
        return self.S.fmap(g, s)

    def s_mult(self, ss):
        return self.S.mult(ss)

    def same(self, a, b) -> bool:
        return a == b

    def leq(self, a, b) -> bool:
        return a <= b

    def input_tower(self, which: str) -> list:
        T, S = self.T, self.S
        return {"unit-": [S], "unit+": [T], "mult-": [T, T, S], "mult+": [T, S, S]}[which]

    def legs(self, which: str, w) -> tuple:
        T, S, rho = self.T, self.S, self.rho
        if which == "unit-":
            return rho(T.unit(w)), self.s_map(T.unit, w)
        if which == "unit+":
            return rho(T.fmap(S.unit, w)), self.s_unit(w)
        if which == "mult-":
            return rho(T.mult(w)), self.s_map(T.mult, rho(T.fmap(rho, w)))
        if which == "mult+":
            return rho(T.fmap(S.mult, w)), self.s_mult(self.s_map(rho, rho(w)))
        raise ValidationError(f"unknown axiom {which!r}; expected one of {AXIOMS}")

    def natural_legs(self, f, w) -> tuple:
        """(ST f . rho, rho . TS f) at one input."""
        T, S = self.T, self.S
        return (
            self.s_map(lambda t: T.fmap(f, t), self.rho(w)),
            self.rho(T.fmap(lambda s: S.fmap(f, s), w)),
        )


class DistrDPLaw(LawSpec):
    """The law D P => P D whose values are convex sets of distributions.

    P-side maps are applied to values vertexwise. That is sound because
    every map applied there (D f, mult of D, the law itself) commutes with
    convex combinations: the law sends sum_k a_k v_k to sum_k a_k rho(v_k)
    (Minkowski), so the union of rho over a hull is the hull of the union
    over its vertices.
    """

    def same(self, a, b) -> bool:
        if isinstance(a, DistHull) and isinstance(b, DistHull):
            return a.same_set(b)
        # a convex set equals a finite set only when it is empty or a point
        hull, finite = (a, b) if isinstance(a, DistHull) else (b, a)
        return len(finite) <= 1 and hull.vertices == finite

    def leq(self, a, b) -> bool:
        return b.includes(a)

    def s_unit(self, x):
        return DistHull([x])

    def s_map(self, g, s):
        if isinstance(s, DistHull):
            return s.map_affine(g)
        return frozenset(g(x) for x in s)

    def legs(self, which: str, w) -> tuple:
        rho = self.rho
        if which == "mult-":
            lhs = rho(D.mult(w))
            outer = D.fmap(rho, w)
            rhs = mix([a for _, a in outer.items()], [c for c, _ in outer.items()])
            return lhs, rhs
        if which == "mult+":
            lhs = rho(D.fmap(P.mult, w))
            inner = rho(w)
            rhs = DistHull(v for vertex in inner.vertices for v in rho(vertex).vertices)
            return lhs, rhs
        return super().legs(which, w)


def _distrPP_rho(E):
    return distrPP_eval(E)


DISTR_PP = LawSpec("distrPP", P, P, _distrPP_rho)
DISTR_DP = DistrDPLaw("distrDP", D, P, distrDP_eval)


def canonical_law(T: MonadSpec, S: MonadSpec = P, budget: Budget | None = None) -> LawSpec:
    """The membership-span law T S => S T for S in the powerset family."""
    if S.kind != "powerset":
        raise ValidationError("canonical laws are built over powerset monads")
    if T.kind == "distribution":
        return DistrDPLaw(f"canonicalP:{T.name}", T, S, distrDP_eval)

    @lru_cache(maxsize=None)
    def rho(w):
        return canonical_law_over_P(T, w, budget)

    return LawSpec(f"canonicalP:{T.name}" + ("" if S is P else f"/{S.name}"), T, S, rho)


def law_by_name(name: str) -> LawSpec:
    if name == "distrPP":
        return DISTR_PP
    if name == "distrDP":
        return DISTR_DP
    if name.startswith("canonicalP:"):
        return canonical_law(monad(name.split(":", 1)[1]))
    raise ValidationError(f"unknown law {name!r}; expected distrPP, distrDP or canonicalP:<monad>")


def check_axiom(law: LawSpec, which: str, X: Iterable, budget: Budget | None = None) -> Verdict:
    if which not in AXIOMS:
        raise ValidationError(f"unknown axiom {which!r}; expected one of {AXIOMS}")
    budget = budget or Budget()
    inputs, exact = tower_inputs(law.input_tower(which), X, budget)
    sweep = Sweep(exact, budget)
    for w in inputs:
        sweep.checked += 1
        lhs, rhs = law.legs(which, w)
        if not law.same(lhs, rhs):
            sweep.fail({"axiom": which, "input": w, "lhs": lhs, "rhs": rhs})
            break
    return sweep.verdict()


@dataclass
class AxiomReport:
    law: str
    sizes: tuple
    verdicts: dict = field(default_factory=dict)

    @property
    def weak(self) -> bool:
        return all(self.verdicts[a].holds for a in ("unit+", "mult-", "mult+"))

    @property
    def strict(self) -> bool:
        return self.weak and self.verdicts["unit-"].holds

    @property
    def classification(self) -> str:
        if self.strict:
            return "strict distributive law (tested)"
        if self.weak:
            return "weak distributive law (tested)"
        if any(v.status is Status.INCONCLUSIVE for v in self.verdicts.values()):
            return "inconclusive"
        return "not a weak distributive law"


def axiom_report(law: LawSpec, sizes: Iterable[int] = (0, 1, 2), budget: Budget | None = None) -> AxiomReport:
    from .verdict import combine

    sizes = tuple(sizes)
    report = AxiomReport(law.name, sizes)
    for which in AXIOMS:
        report.verdicts[which] = combine(check_axiom(law, which, range(n), budget) for n in sizes)
    return report


def check_naturality(law: LawSpec, f: FinFun, budget: Budget | None = None) -> Verdict:
    budget = budget or Budget()
    inputs, exact = tower_inputs([law.T, law.S], f.dom.elems, budget)
    sweep = Sweep(exact, budget)
    for w in inputs:
        sweep.checked += 1
        lhs, rhs = law.natural_legs(f, w)
        if not law.same(lhs, rhs):
            sweep.fail({"input": w, "lhs": lhs, "rhs": rhs})
            break
    return sweep.verdict()


def kleisli_homs(S: MonadSpec, X: list, Y: list) -> list[dict]:
    values = list(S.enumerate(Y, None))
    return [dict(zip(X, choice)) for choice in product(values, repeat=len(X))]


def check_monotone(law: LawSpec, X: Iterable, Y: Iterable, budget: Budget | None = None) -> Verdict:
    """f <= g pointwise (inclusion) implies rho . T f <= rho . T g pointwise."""
    if law.S.kind != "powerset":
        raise ValidationError("the Kleisli order is defined for powerset monads only")
    budget = budget or Budget()
    X, Y = csorted(set(X)), csorted(set(Y))
    homs = kleisli_homs(law.S, X, Y)
    inputs, exact = tower_inputs([law.T], X, budget)
    inputs = list(inputs)
    sweep = Sweep(exact and law.T.exact, budget)
    for f in homs:
        for g in homs:
            if not all(f[x] <= g[x] for x in X):
                continue
            for t in inputs:
                sweep.checked += 1
                lo = law(law.T.fmap(f.__getitem__, t))
                hi = law(law.T.fmap(g.__getitem__, t))
                if not law.leq(lo, hi):
                    sweep.fail({"f": f, "g": g, "input": t, "lhs": lo, "rhs": hi})
                    return sweep.verdict()
    return sweep.verdict()
