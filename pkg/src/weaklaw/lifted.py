"""Idempotent splittings, weak composite monads, the weakly lifted powerset
monad on join-semilattices and on convex algebras, Kleisli membership of
relations, and the decomposable-subobject classifier checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import (
    AlgMorphism,
    JoinSemilattice,
    grid_points,
    is_decomposable,
    is_decomposable_convex_instance,
    product_lattice,
)
from .finrel import FinFun, FinRel, FinSet, ValidationError, compose_rel, csorted, graph, rel_leq, relational_extension_apply
from .laws import LawSpec
from .lp import PolytopeQ, minkowski
from .monads import P, subsets, tower
from .verdict import Budget, Sweep, Verdict, fails, holds


# weak composites


def close_element(law: LawSpec, u):
    """S mult^T . mult^S TT . S rho T . unit^S unit^T ST, at one element of STX."""
    T = law.T
    lifted = law.s_map(law.rho, law.s_unit(T.unit(u)))
    return law.s_map(T.mult, law.s_mult(lifted))


def close_map(law: LawSpec, X: Iterable) -> FinFun:
    elems, exact = tower([law.S, law.T], X)
    if not exact:
        raise ValidationError(f"{law.name}: ST X has no finite enumeration")
    carrier = FinSet(elems)
    return FinFun(carrier, carrier, {u: close_element(law, u) for u in carrier})


def is_idempotent(e: FinFun) -> bool:
    return all(e(e(x)) == e(x) for x in e.dom)


@dataclass(frozen=True)
class IdempotentSplitting:
    obj: FinSet
    retract: FinSet
    p: FinFun
    i: FinFun


def split_idempotent(e: FinFun) -> IdempotentSplitting:
    if e.dom != e.cod or not is_idempotent(e):
        raise ValidationError("map is not an idempotent endomap")
    retract = FinSet(e(x) for x in e.dom)
    p = FinFun(e.dom, retract, {x: e(x) for x in e.dom})
    i = FinFun(retract, e.dom, {r: r for r in retract})
    return IdempotentSplitting(e.dom, retract, p, i)


class WeakComposite:
    """The monad obtained by splitting the idempotent of a weak law.

    Unit and multiplication act elementwise; only the splitting at the
    base object X is materialised.
    """

    def __init__(self, law: LawSpec, X: Iterable):
        self.law = law
        self.X = csorted(set(X))
        self.close = close_map(law, self.X)
        self.splitting = split_idempotent(self.close)
        self.carrier = self.splitting.retract

    def p(self, u):
        return close_element(self.law, u)

    def unit(self, x):
        return self.p(self.law.s_unit(self.law.T.unit(x)))

    def fmap(self, f: Callable, r):
        return self.p(self.law.s_map(lambda t: self.law.T.fmap(f, t), r))

    def mult(self, U):
        law, T = self.law, self.law.T
        spread = law.s_mult(law.s_map(law.rho, U))
        return self.p(law.s_map(T.mult, spread))

    def check_unit_laws(self) -> dict[str, Verdict]:
        left, right = Sweep(True), Sweep(True)
        for r in self.carrier:
            left.checked += 1
            right.checked += 1
            if left.witness is None and self.mult(self.unit(r)) != r:
                left.fail({"element": r})
            if right.witness is None and self.mult(self.fmap(self.unit, r)) != r:
                right.fail({"element": r})
        return {"left_unit": left.verdict(), "right_unit": right.verdict()}

    def draw(self, rng: random.Random, pool: Sequence, budget: Budget):
        """A random element of the composite over `pool`."""
        law = self.law
        return self.p(law.S.sample(lambda: law.T.sample(lambda: rng.choice(pool), rng, budget), rng, budget))

    def check_associativity(self, budget: Budget | None = None) -> Verdict:
        """mult . mult = mult . (composite mult) on seeded random elements of
        the threefold composite (never enumerable: it is doubly exponential
        in the size of the twofold one)."""
        budget = budget or Budget(samples=200)
        rng = random.Random(budget.seed)
        level1 = list(self.carrier)
        sweep = Sweep(False, budget)
        for _ in range(budget.samples or 200):
            level2 = [self.draw(rng, level1, budget) for _ in range(3)]
            W = self.draw(rng, level2, budget)
            sweep.checked += 1
            lhs = self.mult(self.mult(W))
            rhs = self.mult(self.fmap(self.mult, W))
            if lhs != rhs:
                sweep.fail({"element": W, "lhs": lhs, "rhs": rhs})
                break
        return sweep.verdict()


def weak_composite(law: LawSpec, X: Iterable) -> WeakComposite:
    return WeakComposite(law, X)


def is_union_closed(family: frozenset) -> bool:
    return all(a | b in family for a in family for b in family)


# lifted powerset on join-semilattices


class LiftedPowersetJSL:
    """Subsets of A closed under nonempty joins (the empty set included),
    with the join of a family given by pointwise selection."""

    def __init__(self, A: JoinSemilattice):
        self.A = A
        self._index = {x: i for i, x in enumerate(A.elements)}
        self._carrier = None

    def is_closed(self, e: Iterable) -> bool:
        e = frozenset(e)
        return all(self.A.join(a, b) in e for a in e for b in e)

    def pi(self, e: Iterable) -> frozenset:
        """Closure under nonempty joins."""
        out = set(e)
        frontier = list(out)
        while frontier:
            a = frontier.pop()
            for b in list(out):
                c = self.A.join(a, b)
                if c not in out:
                    out.add(c)
                    frontier.append(c)
        return frozenset(out)

    @staticmethod
    def iota(e: frozenset) -> frozenset:
        return e

    @property
    def carrier(self) -> list:
        if self._carrier is None:
            self._carrier = enumerate_closed_subsets(self.A)
        return self._carrier

    def join2(self, E: frozenset, F: frozenset) -> frozenset:
        return frozenset(self.A.join(a, b) for a in E for b in F)

    def join_family(self, Es: Iterable[frozenset]) -> frozenset:
        acc = frozenset([self.A.bottom])
        for E in Es:
            acc = self.join2(acc, E)
        return self.pi(acc)

    def lattice(self) -> JoinSemilattice:
        return JoinSemilattice(self.carrier, self.join2, frozenset([self.A.bottom]), f"liftP({self.A.name})")

    def unit(self, x) -> frozenset:
        return frozenset([x])

    def mult(self, family: Iterable[frozenset]) -> frozenset:
        return self.pi(frozenset().union(*family))

    def lift_morphism(self, other: "LiftedPowersetJSL", f: Callable) -> Callable:
        return lambda E: other.pi(f(x) for x in E)


def enumerate_closed_subsets(A: JoinSemilattice) -> list:
    """All subsets of A closed under binary joins, by bitmask filtering."""
    els = list(A.elements)
    n = len(els)
    idx = {x: i for i, x in enumerate(els)}
    join = [[idx[A.join(a, b)] for b in els] for a in els]
    out = []
    for mask in range(1 << n):
        members = [i for i in range(n) if mask >> i & 1]
        ok = True
        for a in members:
            row = join[a]
            for b in members:
                if not mask >> row[b] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(els[i] for i in members))
    return csorted(out)


def lift_powerset_jsl(A: JoinSemilattice) -> LiftedPowersetJSL:
    return LiftedPowersetJSL(A)


def lift_closure_via_law(law: LawSpec, A: JoinSemilattice, e: frozenset) -> frozenset:
    """The splitting idempotent of the lifted monad read off a law over P:
    (S a) . rho_A . unit^T at e, i.e. joins of the law's outputs."""
    return frozenset(A.join_all(c) for c in law.rho(law.T.unit(e)))


def lift_join_via_law(law: LawSpec, A: JoinSemilattice, family: frozenset) -> frozenset:
    """The lifted algebra structure p . S a . rho_A . T i at one family."""
    lifted = LiftedPowersetJSL(A)
    return lifted.pi(A.join_all(c) for c in law.rho(family))


# lifted powerset on convex algebras


class LiftedPowersetConv:
    """Convex subsets (sub-polytopes) of a polytope algebra; the D-action
    takes convex combinations of subsets pointwise."""

    def __init__(self, A: PolytopeQ):
        self.A = A

    def element(self, points: Iterable) -> PolytopeQ:
        E = PolytopeQ(self.A.dim, points)
        if not self.A.includes(E):
            raise ValidationError("subset leaves the carrier polytope")
        return E

    def unit(self, x) -> PolytopeQ:
        return PolytopeQ(self.A.dim, [x])

    def combine(self, weights: Sequence, parts: Sequence[PolytopeQ]) -> PolytopeQ:
        if sum(Fraction(w) for w in weights) != 1:
            raise ValidationError("weights must sum to 1")
        return minkowski(weights, parts)

    @staticmethod
    def lift_affine(f: Callable, E: PolytopeQ, dim: int) -> PolytopeQ:
        return PolytopeQ(dim, [f(v) for v in E.vertices])


def lift_powerset_conv(A: PolytopeQ) -> LiftedPowersetConv:
    return LiftedPowersetConv(A)


# Kleisli membership of relations


@dataclass(frozen=True)
class MembershipReport:
    classification: str
    lhs: FinRel
    rhs: FinRel

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def kleisli_lift_membership(psi: FinRel, A: JoinSemilattice, B: JoinSemilattice) -> MembershipReport:
    """Compare psi . a with b . (P psi) as relations PA -/-> B.

    `not-an-algebra-relation` when the inclusion b . P psi <= psi . a
    fails, `algebra-relation-only` when it is strict, `kleisli-of-lift`
    on equality.
    """
    a = FinFun(FinSet(subsets(A.elements)), A.carrier, A.join_all)
    b = FinFun(FinSet(subsets(B.elements)), B.carrier, B.join_all)
    lhs = compose_rel(graph(a), psi)
    rhs = compose_rel(relational_extension_apply(P, psi), graph(b))
    if not rel_leq(rhs, lhs):
        cls = "not-an-algebra-relation"
    elif rhs == lhs:
        cls = "kleisli-of-lift"
    else:
        cls = "algebra-relation-only"
    return MembershipReport(cls, lhs, rhs)


def left_leg_morphism(psi: FinRel, A: JoinSemilattice, B: JoinSemilattice) -> AlgMorphism | None:
    """The first projection out of psi as a join-semilattice morphism, if
    psi is closed under joins (including the empty join)."""
    pairs = psi.pairs
    if (A.bottom, B.bottom) not in pairs:
        return None
    R = product_lattice(A, B, pairs)
    if any(R.join(p, q) not in pairs for p in pairs for q in pairs):
        return None
    return AlgMorphism(R.algebra(), A.algebra(), lambda p: p[0])


def membership_vs_decomposability(psi: FinRel, A: JoinSemilattice, B: JoinSemilattice) -> tuple[bool, bool]:
    """(psi . a = b . P psi, left leg is a decomposable morphism)."""
    equal = kleisli_lift_membership(psi, A, B).equal
    leg = left_leg_morphism(psi, A, B)
    decomposable = leg is not None and is_decomposable(leg).holds
    return equal, decomposable


# subobject classifier


@dataclass(frozen=True)
class ClassifierReport:
    verdict: Verdict
    decomposable_monos: tuple
    characteristic_maps: int
    down_closed: tuple


def sub_jsls(A: JoinSemilattice) -> list[frozenset]:
    return [e for e in enumerate_closed_subsets(A) if A.bottom in e]


def classifier_check_jsl(A: JoinSemilattice) -> ClassifierReport:
    """Decomposable sub-algebras of A versus morphisms A -> liftP(1).

    Each morphism chi classifies chi^-1(unit point); the check demands that
    this is a bijection onto the decomposable monos and that these are
    exactly the downward-closed sub-algebras.
    """
    one = JoinSemilattice(["*"], {("*", "*"): "*"}, "*", "1")
    omega = LiftedPowersetJSL(one)
    true_point = omega.unit("*")
    targets = omega.carrier
    Omega = omega.lattice()

    monos = []
    for E in sub_jsls(A):
        sub = JoinSemilattice(E, A.join, A.bottom)
        if is_decomposable(AlgMorphism(sub.algebra(), A.algebra(), lambda x: x)).holds:
            monos.append(E)

    from itertools import product as cartesian

    classified = []
    n_maps = 0
    for values in cartesian(targets, repeat=len(A.elements)):
        chi = dict(zip(A.elements, values))
        if all(chi[A.join_all(u)] == Omega.join_all(chi[x] for x in u) for u in subsets(A.elements)):
            n_maps += 1
            classified.append(frozenset(x for x in A.elements if chi[x] == true_point))

    down = [E for E in sub_jsls(A) if all(y in E for x in E for y in A.down(x))]
    checked = n_maps + len(monos)
    ok = (
        len(set(classified)) == len(classified)
        and set(classified) == set(monos)
        and set(monos) == set(down)
    )
    if ok:
        verdict = holds(checked, True)
    else:
        verdict = fails(
            checked,
            {"classified": csorted(classified), "decomposable": csorted(monos), "down_closed": csorted(down)},
        )
    return ClassifierReport(verdict, tuple(csorted(monos)), n_maps, tuple(csorted(down)))


def combos(A: PolytopeQ, maxden: int) -> list[tuple]:
    """Triples (lam, c, c2) with lam in (0, 1) of denominator <= maxden and
    c, c2 grid points of A."""
    pts = grid_points(A, maxden)
    lams = sorted({Fraction(k, d) for d in range(2, maxden + 1) for k in range(1, d)})
    return [(lam, c, c2) for lam in lams for c in pts for c2 in pts if c != c2]


@dataclass(frozen=True)
class WallReport:
    wall: bool
    decomposable: bool
    affine_characteristic: bool
    witness: dict | None


def classifier_check_conv(A: PolytopeQ, E: PolytopeQ, budget: Budget | None = None) -> WallReport:
    """Sampled wall test for a convex subset E of A, alongside the two
    readings it should agree with: decomposability of E -> A at sampled
    two-point disintegrations, and affinity of the characteristic map into
    liftP(1) = {empty, point} (the empty set absorbs any positive weight)."""
    maxden = max((budget or Budget(maxden=3)).maxden, 2)
    wall, decomposable, affine = True, True, True
    witness = None
    # the inclusion read backwards: pairs (m(e), e) for e in E
    inclusion = PolytopeQ(2 * A.dim, [tuple(v) + tuple(v) for v in E.vertices])
    for lam, c, c2 in combos(A, maxden):
        e = tuple(lam * a + (1 - lam) * b for a, b in zip(c, c2))
        in_e, in_c, in_c2 = E.contains(e), E.contains(c), E.contains(c2)
        if in_e and not (in_c and in_c2):
            wall = False
            witness = witness or {"point": e, "weight": lam, "parts": [c, c2]}
        if in_e and decomposable:
            res = is_decomposable_convex_instance(inclusion, A.dim, e, [lam, 1 - lam], [c, c2], e)
            decomposable = res.feasible
        # chi(lam c + (1-lam) c2) must be lam chi(c) + (1-lam) chi(c2)
        if in_e != (in_c and in_c2):
            affine = False
            witness = witness or {"point": e, "weight": lam, "parts": [c, c2]}
    return WallReport(wall, decomposable, affine, witness)


@dataclass
class MembershipSweep:
    checked: int
    by_class: dict
    discrepancies: list


def membership_sweep(max_size: int = 3) -> MembershipSweep:
    """Every relation between every pair of labelled join-semilattices with
    1..max_size elements: equality of the two composites against
    decomposability of the left leg, both by brute force."""
    from itertools import product as cartesian

    from .algebra import all_lattices

    lattices = [L for n in range(1, max_size + 1) for L in all_lattices(n)]
    checked, by_class, bad = 0, {}, []
    for A in lattices:
        for B in lattices:
            cells = [(a, b) for a in A.elements for b in B.elements]
            for bits in cartesian((False, True), repeat=len(cells)):
                psi = FinRel(A.carrier, B.carrier, (c for c, bit in zip(cells, bits) if bit))
                report = kleisli_lift_membership(psi, A, B)
                leg = left_leg_morphism(psi, A, B)
                decomposable = leg is not None and is_decomposable(leg).holds
                checked += 1
                by_class[report.classification] = by_class.get(report.classification, 0) + 1
                if report.equal != decomposable:
                    bad.append({"source": A.table, "target": B.table, "relation": psi, "equal": report.equal})
    return MembershipSweep(checked, by_class, bad)
