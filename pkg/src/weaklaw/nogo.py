"""Negative results as searches with replayable witnesses: the singleton
test for lifting the powerset law, Yang-Baxter style hexagons, failures of
decomposability preservation (join-semilattices, convex sets, monoids) and
the table of monotone weak laws over lifted powersets."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Iterable, Sequence

from .algebra import (
    JoinSemilattice,
    OutOfRange,
    TruncatedMonoid,
    grid_points,
    is_decomposable_convex_instance,
    is_decomposable_jsl,
    powerset_lattice,
    simplex,
)
from .finrel import FinFun, FinSet, ValidationError, csorted
from .laws import LawSpec, axiom_report, canonical_law, check_monotone, distrPP_eval
from .lifted import LiftedPowersetJSL
from .lp import EQ, GE, Constraint, LPResult, PolytopeQ, in_hull, lp_feasible, replay_certificate
from .monads import MONADS, P, PF, PSTAR, Multiset, check_finite_preimage_preservation, compositions, subsets, tower_inputs
from .verdict import Budget, Status, Sweep, Verdict


@dataclass
class Witness:
    """A counterexample: the input, the two sides that should agree, and
    where they were compared. `recompute` re-derives both sides from the
    stored input so the inequality can be replayed."""

    locus: str
    input: Any
    lhs: Any
    rhs: Any
    data: dict = field(default_factory=dict)
    recompute: Callable[[], tuple] | None = field(default=None, repr=False, compare=False)
    relation: str = "!="  # what the stored sides show: lhs != rhs, or lhs not in rhs

    def replay(self) -> bool:
        if self.recompute is None:
            return False
        lhs, rhs = self.recompute()
        if lhs != self.lhs or rhs != self.rhs:
            return False
        return lhs not in rhs if self.relation == "not in" else lhs != rhs

    def to_json(self) -> dict:
        return {
            "locus": self.locus,
            "input": self.input,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "data": self.data,
        }


# the singleton test


@dataclass
class SingletonTest:
    """{A} is a lifted-lifted element while the set of all nonempty
    subsets of A is not; `holds` means the powerset law has no lifting of
    the inclusion kind over this algebra category."""

    singleton_in: bool
    nonempty_subsets_in: bool
    witness: Witness | None

    @property
    def holds(self) -> bool:
        return self.singleton_in and not self.nonempty_subsets_in


def singleton_lifting_test(A: JoinSemilattice | PolytopeQ, maxden: int = 2) -> SingletonTest:
    if isinstance(A, JoinSemilattice):
        return _singleton_test_jsl(A)
    if isinstance(A, PolytopeQ):
        return _singleton_test_conv(A, maxden)
    raise ValidationError("expected a JoinSemilattice or a PolytopeQ")


def _singleton_test_jsl(A: JoinSemilattice) -> SingletonTest:
    lifted = LiftedPowersetJSL(A)
    carrier = frozenset(A.elements)
    # {A} is closed under the lifted join since A is join-closed
    singleton_in = lifted.is_closed(carrier) and lifted.join2(carrier, carrier) == carrier
    # all nonempty subsets are lifted-lifted elements iff each is join-closed
    bad = next((e for e in subsets(A.elements, nonempty=True) if not lifted.is_closed(e)), None)
    witness = None
    if bad is not None:
        bad_pair = next((a, b) for a in csorted(bad) for b in csorted(bad) if A.join(a, b) not in bad)
        law_out = distrPP_eval(frozenset([carrier]))

        def recompute():
            out = distrPP_eval(frozenset([carrier]))
            return bad in out, lifted.is_closed(bad)

        witness = Witness(
            "singleton-law-output",
            frozenset([carrier]),
            bad in law_out,
            lifted.is_closed(bad),
            {"member": bad, "pair": bad_pair, "join": A.join(*bad_pair)},
            recompute,
        )
    return SingletonTest(singleton_in, bad is None, witness)


def _singleton_test_conv(A: PolytopeQ, maxden: int) -> SingletonTest:
    # A itself is convex and {A} is a one-point (so convex) family
    singleton_in = True
    pts = grid_points(A, max(maxden, 2))
    witness = None
    for p, q in combinations(pts, 2):
        mid = tuple((a + b) / 2 for a, b in zip(p, q))
        if mid not in (p, q):
            member = frozenset([p, q])

            def recompute(member=member, mid=mid, p=p, q=q):
                return in_hull(mid, [p, q]), mid in member

            witness = Witness(
                "singleton-law-output",
                A,
                True,
                False,
                {"member": member, "midpoint": mid},
                recompute,
            )
            break
    return SingletonTest(singleton_in, witness is None, witness)


# Yang-Baxter hexagons


def _check_triple(rho: LawSpec, sigma: LawSpec, tau: LawSpec) -> None:
    """rho: TS => ST, tau: TR => RT, sigma: SR => RS."""
    if not (rho.T is tau.T and rho.S is sigma.T and tau.S is sigma.S):
        raise ValidationError("laws do not form a triple TS => ST, SR => RS, TR => RT")


def yb_legs(rho: LawSpec, sigma: LawSpec, tau: LawSpec, w) -> tuple:
    """(R rho . tau S . T sigma, sigma T . S tau . rho R) at w in TSR X."""
    T, S, R = rho.T, rho.S, tau.S
    top = R.fmap(rho.rho, tau.rho(T.fmap(sigma.rho, w)))
    bottom = sigma.rho(S.fmap(tau.rho, rho.rho(w)))
    return top, bottom


def pi_yb_legs(rho: LawSpec, sigma: LawSpec, tau: LawSpec, w) -> tuple:
    """The long side replaces sigma T . S tau . rho R by its composite with
    R S mult^T . R rho T . tau S T . unit^T R S T."""
    T, S, R = rho.T, rho.S, tau.S
    top, bottom = yb_legs(rho, sigma, tau, w)
    spread = tau.rho(T.unit(bottom))
    return top, R.fmap(lambda u: S.fmap(T.mult, rho.rho(u)), spread)


def _hexagon(name: str, legs: Callable, rho, sigma, tau, X, budget) -> tuple[Verdict, Witness | None]:
    _check_triple(rho, sigma, tau)
    budget = budget or Budget()
    inputs, exact = tower_inputs([rho.T, rho.S, tau.S], X, budget)
    if exact:
        inputs = iter(csorted(inputs))  # least witness first
    sweep = Sweep(exact, budget)
    for w in inputs:
        sweep.checked += 1
        lhs, rhs = legs(rho, sigma, tau, w)
        if not rho.same(lhs, rhs):
            witness = Witness(name, w, lhs, rhs, {"laws": [rho.name, sigma.name, tau.name]},
                              lambda w=w: legs(rho, sigma, tau, w))
            sweep.fail({"input": w, "lhs": lhs, "rhs": rhs})
            return sweep.verdict(), witness
    return sweep.verdict(), None


def yang_baxter_check(rho: LawSpec, sigma: LawSpec, tau: LawSpec, X: Iterable, budget: Budget | None = None):
    return _hexagon("yang-baxter", yb_legs, rho, sigma, tau, X, budget)


def pi_yang_baxter_check(rho: LawSpec, sigma: LawSpec, tau: LawSpec, X: Iterable, budget: Budget | None = None):
    return _hexagon("pi-yang-baxter", pi_yb_legs, rho, sigma, tau, X, budget)


# preservation of decomposable morphisms: join-semilattices


@dataclass(frozen=True)
class LatticeMap:
    source: JoinSemilattice
    target: JoinSemilattice
    fn: Callable

    def __call__(self, x):
        return self.fn(x)


def restrict_nonempty(lat: JoinSemilattice) -> JoinSemilattice:
    """The sub-semilattice of nonempty elements of a lifted carrier."""
    return JoinSemilattice([e for e in lat.elements if e], lat.join, lat.bottom, lat.name + "*")


def lift_lattice_map(f: LatticeMap, nonempty: bool = False) -> LatticeMap:
    LA, LB = LiftedPowersetJSL(f.source), LiftedPowersetJSL(f.target)
    A, B = LA.lattice(), LB.lattice()
    if nonempty:
        A, B = restrict_nonempty(A), restrict_nonempty(B)
    return LatticeMap(A, B, LA.lift_morphism(LB, f.fn))


def lattice_lift_gap(f: LatticeMap, x, u) -> Any:
    """Join of the greatest elements below x over each member of u, or
    None when some member has no element below x over it. Recomputed by
    a plain scan, independently of the search."""
    A = f.source
    parts = []
    for b in csorted(u):
        fibre = [y for y in A.elements if f(y) == b and A.join(y, x) == x]
        if not fibre:
            return None
        parts.append(A.join_all(fibre))
    return A.join_all(parts)


def _jsl_witness(f: LatticeMap, lifted: LatticeMap, v: Verdict) -> Witness:
    x, u = v.witness["x"], v.witness["u"]
    B = lifted.target

    def recompute():
        return x, lattice_lift_gap(lifted, x, u)

    return Witness(
        "lifted-decomposability",
        {"x": x, "u": u},
        x,
        lattice_lift_gap(lifted, x, u),
        {"image": lifted(x), "join_of_u": B.join_all(u), "base_checked": True},
        recompute,
    )


def search_preservation_counterexample(morphisms: Iterable[LatticeMap], nonempty: bool = False) -> Witness | None:
    """First f (in the given order) that is decomposable while its lift to
    the lifted powerset is not; the witness is the failing pair (x, u): u is
    a family with join lift(f)(x) and the greatest candidates below x over
    u do not join to x (rhs None: some member has no candidate at all)."""
    for f in morphisms:
        if not is_decomposable_jsl(f.fn, f.source, f.target).holds:
            continue
        lifted = lift_lattice_map(f, nonempty)
        v = is_decomposable_jsl(lifted.fn, lifted.source, lifted.target)
        if v.fails:
            return _jsl_witness(f, lifted, v)
    return None


def parity_map(n: int = 4) -> LatticeMap:
    """P(i -> i mod 2) between the free join-semilattices on n and on 2."""
    return LatticeMap(powerset_lattice(range(n)), powerset_lattice(range(2)), lambda e: frozenset(x % 2 for x in e))


# preservation of decomposable morphisms: convex sets


@dataclass(frozen=True)
class AffineMap:
    """The affine map between simplices sending vertex k to images[k]."""

    images: tuple

    @property
    def dim(self) -> int:
        return len(self.images[0])

    def __call__(self, p: Sequence) -> tuple:
        return tuple(sum(Fraction(c) * img[k] for c, img in zip(p, self.images)) for k in range(self.dim))

    def linear(self, v: Sequence) -> tuple:
        return self(v)


@dataclass
class SegmentCase:
    orientation: tuple
    constraints: tuple
    nvars: int
    result: LPResult

    @property
    def certified(self) -> bool:
        if self.result.feasible:
            return False
        return replay_certificate(self.constraints, self.nvars, [True] * self.nvars, self.result.certificate)


@dataclass
class SegmentDisintegration:
    """Can the segment x = [p, q] be written as sum_i w_i X_i with X_i
    convex and f(X_i) = Y_i? Each X_i must be a parallel segment
    [p_i, p_i + alpha_i (q - p)] (Minkowski summands of a segment), so the
    question splits into one LP per choice of endpoint orientation."""

    segment: tuple
    weights: tuple
    targets: tuple
    cases: list

    @property
    def feasible(self) -> bool:
        return any(c.result.feasible for c in self.cases)

    @property
    def certified_infeasible(self) -> bool:
        return bool(self.cases) and all(c.certified for c in self.cases)


def segment_disintegration(f: AffineMap, segment: tuple, weights: Sequence, targets: Sequence[tuple]) -> SegmentDisintegration:
    p, q = (tuple(Fraction(c) for c in pt) for pt in segment)
    weights = tuple(Fraction(w) for w in weights)
    if sum(weights) != 1 or len(weights) != len(targets):
        raise ValidationError("weights must sum to 1, one per target")
    d, e, n = len(p), f.dim, len(targets)
    v = tuple(b - a for a, b in zip(p, q))
    fv = f.linear(v)
    width = d + 1  # p_i then alpha_i
    nvars = n * width
    base = []

    def var(i, k):
        return i * width + k

    def row(entries):
        out = [Fraction(0)] * nvars
        for j, c in entries:
            out[j] += Fraction(c)
        return out

    for i in range(n):
        base.append(Constraint.make(row((var(i, k), 1) for k in range(d)), EQ, 1))
        for k in range(d):
            base.append(Constraint.make(row([(var(i, k), 1), (var(i, d), v[k])]), GE, 0))
    base.append(Constraint.make(row((var(i, d), weights[i]) for i in range(n)), EQ, 1))
    for k in range(d):
        base.append(Constraint.make(row((var(i, k), weights[i]) for i in range(n)), EQ, p[k]))
    options = []
    for a, b in targets:
        a, b = tuple(Fraction(c) for c in a), tuple(Fraction(c) for c in b)
        options.append([(a, a)] if a == b else [(a, b), (b, a)])
    cases = []
    for choice in _product(options):
        cons = list(base)
        for i, (start, end) in enumerate(choice):
            for k in range(e):
                # f(p_i) = start and alpha_i f(v) = end - start
                cons.append(Constraint.make(row((var(i, j), f.images[j][k]) for j in range(d)), EQ, start[k]))
                cons.append(Constraint.make(row([(var(i, d), fv[k])]), EQ, end[k] - start[k]))
        res = lp_feasible(cons, nvars, [True] * nvars)
        cases.append(SegmentCase(tuple(choice), tuple(cons), nvars, res))
        if res.feasible:
            break
    return SegmentDisintegration((p, q), weights, tuple(targets), cases)


def _product(options):
    if not options:
        yield ()
        return
    for head in options[0]:
        for rest in _product(options[1:]):
            yield (head,) + rest


def collapse_map() -> AffineMap:
    """D{A,B,C} -> D{B,C} with A, B |-> B and C |-> C."""
    one, zero = Fraction(1), Fraction(0)
    return AffineMap(((one, zero), (one, zero), (zero, one)))


def triangle_points() -> dict:
    """Named points of the triangle, barycentric in (A, B, C), and of the edge
    D{B,C} (coordinates for B and C)."""
    h, t = Fraction(1, 2), Fraction(1, 3)
    A, B, C = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    G = tuple(h * a + h * c for a, c in zip(A, C))
    F = tuple(2 * t * b + t * c for b, c in zip(B, C))
    Dp = tuple(h * b + h * f for b, f in zip(B, F))
    return {
        "A": tuple(map(Fraction, A)),
        "B": tuple(map(Fraction, B)),
        "C": tuple(map(Fraction, C)),
        "G": G,
        "F": F,
        "D": Dp,
        "E": tuple(h * b + h * c for b, c in zip(B, C)),
    }


def collapse_segment_instance() -> tuple[SegmentDisintegration, Witness]:
    """The segment [G, D] with G the midpoint of AC, F = 2/3 B + 1/3 C and D
    the midpoint of BF: its image is 1/2 {B} + 1/2 [F, C] in D{B,C}, yet no
    convex X_1, X_2 over {B} and [F, C] average to [G, D]."""
    f = collapse_map()
    pts = triangle_points()
    fB, fC, fF = f(pts["B"]), f(pts["C"]), f(pts["F"])
    targets = ((fB, fB), (fF, fC))
    half = Fraction(1, 2)
    res = segment_disintegration(f, (pts["G"], pts["D"]), (half, half), targets)
    image = (f(pts["G"]), f(pts["D"]))

    def recompute():
        again = segment_disintegration(f, (pts["G"], pts["D"]), (half, half), targets)
        return again.certified_infeasible, again.feasible

    witness = Witness(
        "lifted-decomposability",
        {"segment": (pts["G"], pts["D"]), "weights": (half, half), "targets": targets},
        res.certified_infeasible,
        res.feasible,
        {"image": image, "certificates": [c.result.certificate for c in res.cases]},
        recompute,
    )
    return res, witness


def _edge_segments(pts: list) -> list:
    return [(a, b) for a in pts for b in pts if a <= b]


def _as_segment_sum(weights, Ys, y) -> bool:
    """sum_i w_i Y_i == y for collinear segments, compared as point sets."""
    lo = tuple(sum(w * Y[0][k] for w, Y in zip(weights, Ys)) for k in range(len(y[0])))
    hi = tuple(sum(w * Y[1][k] for w, Y in zip(weights, Ys)) for k in range(len(y[0])))
    return {lo, hi} == {y[0], y[1]} and _collinear([pt for Y in Ys for pt in Y] + list(y))


def _collinear(pts) -> bool:
    base = pts[0]
    dirs = [tuple(b - a for a, b in zip(base, p)) for p in pts[1:]]
    dirs = [v for v in dirs if any(v)]
    if not dirs:
        return True
    d0 = dirs[0]
    return all(all(v[i] * d0[j] == v[j] * d0[i] for i in range(len(d0)) for j in range(len(d0))) for v in dirs)


def check_affine_decomposable(f: AffineMap, n: int, maxden: int) -> Verdict:
    """Sampled decomposability of f: D(n) -> D(m): for grid x and grid
    y_1, y_2 with f(x) = (y_1 + y_2) / 2 there are x_i over y_i averaging
    to x (one LP per instance, on the reversed graph of f)."""
    src = simplex(n)
    m = f.dim
    graph_rev = PolytopeQ(m + n, [tuple(f(v)) + tuple(v) for v in src.vertices])
    half = Fraction(1, 2)
    tgt_pts = grid_points(simplex(m), maxden)
    sweep = Sweep(False, Budget(maxden=maxden))
    for x in grid_points(src, maxden):
        fx = f(x)
        for y1 in tgt_pts:
            y2 = tuple(2 * a - b for a, b in zip(fx, y1))
            if any(c < 0 for c in y2):
                continue
            sweep.checked += 1
            res = is_decomposable_convex_instance(graph_rev, m, fx, [half, half], [y1, y2], x)
            if not res.feasible:
                sweep.fail({"x": x, "parts": [y1, y2]})
                return sweep.verdict()
    return sweep.verdict()


def search_conv_counterexample(f: AffineMap, n: int, maxden: int = 2) -> Witness | None:
    """Least grid segment x of D(n) and halving f(x) = (Y_1 + Y_2) / 2 into
    grid segments of the target such that no convex halves of x lie over
    Y_1 and Y_2."""
    half = Fraction(1, 2)
    src_pts = grid_points(simplex(n), maxden)
    tgt_segs = _edge_segments(grid_points(simplex(f.dim), maxden))
    for p, q in combinations(src_pts, 2):
        y = (f(p), f(q))
        for Y1 in tgt_segs:
            for Y2 in tgt_segs:
                if not _as_segment_sum((half, half), (Y1, Y2), y):
                    continue
                res = segment_disintegration(f, (p, q), (half, half), (Y1, Y2))
                if res.feasible:
                    continue

                def recompute(p=p, q=q, Y1=Y1, Y2=Y2):
                    again = segment_disintegration(f, (p, q), (half, half), (Y1, Y2))
                    return again.certified_infeasible, again.feasible

                return Witness(
                    "lifted-decomposability",
                    {"segment": (p, q), "weights": (half, half), "targets": (Y1, Y2)},
                    res.certified_infeasible,
                    False,
                    {"image": y, "certificates": [c.result.certificate for c in res.cases]},
                    recompute,
                )
    return None


# monoids and commutative monoids


def word_monoids(lmax: int, commutative: bool) -> tuple[TruncatedMonoid, TruncatedMonoid, Callable]:
    """Truncated free (commutative) monoids on {a, b} and {a}, with the
    morphism generated by a, b |-> a."""
    src = TruncatedMonoid(("a", "b"), lmax, commutative)
    tgt = TruncatedMonoid(("a",), lmax, commutative)
    return src, tgt, src.extend(lambda x: tgt.letter("a"), tgt)


def free_map_decomposable(src: TruncatedMonoid, tgt: TruncatedMonoid, f: Callable) -> Verdict:
    """Binary and nullary factorisations f(w) = b1 b2 lift to w = w1 w2
    with f(w_i) = b_i; longer ones follow by associativity."""
    sweep = Sweep(True)
    words = src.elements
    for w in words:
        fw = f(w)
        sweep.checked += 1
        if fw == tgt.unit() and w != src.unit():
            sweep.fail({"word": w, "factors": []})
            return sweep.verdict()
        for b1 in tgt.elements:
            for b2 in tgt.elements:
                try:
                    if tgt.mul(b1, b2) != fw:
                        continue
                except OutOfRange:
                    continue
                sweep.checked += 1
                if not any(_mul_is(src, w1, w2, w) for w1 in words if f(w1) == b1 for w2 in words if f(w2) == b2):
                    sweep.fail({"word": w, "factors": [b1, b2]})
                    return sweep.verdict()
    return sweep.verdict()


def _mul_is(mon: TruncatedMonoid, u, v, w) -> bool:
    try:
        return mon.mul(u, v) == w
    except OutOfRange:
        return False


def _set_product(mon: TruncatedMonoid, U, V):
    try:
        return mon.set_product(U, V)
    except OutOfRange:
        return None


@dataclass
class MonoidNoGo:
    """No (alpha_1, alpha_2) over (beta_1, beta_2) with product alpha."""

    column: str
    structure: str
    lmax: int | None
    beta: Any
    betas: tuple
    alpha: Any
    premises: dict
    candidates: tuple
    solutions: list
    witness: Witness

    @property
    def confirmed(self) -> bool:
        return all(self.premises.values()) and not self.solutions


def reproduce_mon_cmon(lmax: int = 2) -> dict[str, MonoidNoGo]:
    """Subset lifting over the truncated words: for Mon beta = {aa},
    beta_i = {a}, alpha = {ab, ba}; for CMon beta = {2a}, beta_i = {a},
    alpha = {2a, 2b}. Every subset of the truncated words is a candidate."""
    if lmax < 2:
        raise ValidationError("the counterexample needs words of length 2 (lmax >= 2)")
    out = {}
    for name, comm in (("Mon", False), ("CMon", True)):
        src, tgt, f = word_monoids(lmax, comm)
        a, b = src.letter("a"), src.letter("b")
        ta = tgt.letter("a")
        if comm:
            alpha = frozenset([src.mul(a, a), src.mul(b, b)])
        else:
            alpha = frozenset([src.mul(a, b), src.mul(b, a)])
        beta1 = beta2 = frozenset([ta])
        beta = tgt.set_product(beta1, beta2)
        image = lambda U: frozenset(f(w) for w in U)  # noqa: E731
        over1 = [U for U in subsets(src.elements) if image(U) == beta1]
        over2 = [U for U in subsets(src.elements) if image(U) == beta2]
        premises = {
            "beta_is_product": beta == frozenset([tgt.mul(ta, ta)]),
            "alpha_over_beta": image(alpha) == beta,
            "base_map_decomposable": free_map_decomposable(src, tgt, f).holds,
        }

        def products(over1=over1, over2=over2, src=src, alpha=alpha):
            return alpha, frozenset(_set_product(src, U, V) for U in over1 for V in over2)

        sols = [(U, V) for U in over1 for V in over2 if _set_product(src, U, V) == alpha]
        witness = Witness(
            f"{name}-subset-lifting",
            {"alpha": alpha, "betas": (beta1, beta2)},
            *products(),
            {"candidates": (tuple(over1), tuple(over2)), "out_of_range": "a product past the truncation counts as no match"},
            products,
            "not in",
        )
        out[name] = MonoidNoGo("P", name, lmax, beta, (beta1, beta2), alpha, premises,
                               (tuple(over1), tuple(over2)), sols, witness)
    return out


# multiset and distribution columns

def _word_fibre_M(src: TruncatedMonoid, f: Callable, beta: Multiset) -> list:
    """All multisets of words that f maps onto beta (finite: f preserves length)."""
    acc = [Multiset()]
    for word, k in beta.items():
        pre = [w for w in src.elements if f(w) == word]
        choices = [Multiset(dict(zip(pre, comp))) for comp in compositions(k, len(pre))]
        acc = [_madd(u, c) for u in acc for c in choices]
    return acc


def _madd(u: Multiset, v: Multiset) -> Multiset:
    acc = dict(u.items())
    for x, n in v.items():
        acc[x] = acc.get(x, 0) + n
    return Multiset(acc)


def _mmul(mon: TruncatedMonoid, u: Multiset, v: Multiset) -> Multiset:
    acc: dict = {}
    for x, n in u.items():
        for y, k in v.items():
            z = mon.mul(x, y)
            acc[z] = acc.get(z, 0) + n * k
    return Multiset(acc)


def multiset_no_go(commutative: bool, lmax: int = 2) -> MonoidNoGo:
    """(1 a)(2 a) = 2 aa is the image of 1 ab + 1 ba (Mon) or of
    1 (2a) + 1 (2b) (CMon); the fibres over 1 a and 2 a are finite, and no
    pair from them multiplies to it."""
    src, tgt, f = word_monoids(lmax, commutative)
    a, b = src.letter("a"), src.letter("b")
    ta = tgt.letter("a")
    beta1, beta2 = Multiset({ta: 1}), Multiset({ta: 2})
    if commutative:
        alpha = Multiset({src.mul(a, a): 1, src.mul(b, b): 1})
    else:
        alpha = Multiset({src.mul(a, b): 1, src.mul(b, a): 1})
    beta = _mmul(tgt, beta1, beta2)
    image = Multiset({})
    for w, n in alpha.items():
        image = _madd(image, Multiset({f(w): n}))
    over1, over2 = _word_fibre_M(src, f, beta1), _word_fibre_M(src, f, beta2)

    def products():
        return alpha, frozenset(_mmul(src, u, v) for u in over1 for v in over2)

    sols = [(u, v) for u in over1 for v in over2 if _mmul(src, u, v) == alpha]
    name = "CMon" if commutative else "Mon"
    witness = Witness(
        f"{name}-multiset-lifting",
        {"alpha": alpha, "betas": (beta1, beta2)},
        *products(),
        {"candidates": (tuple(over1), tuple(over2))},
        products,
        "not in",
    )
    premises = {"beta_is_product": beta == Multiset({tgt.mul(ta, ta): 2}), "alpha_over_beta": image == beta}
    return MonoidNoGo("M", name, lmax, beta, (beta1, beta2), alpha, premises, (tuple(over1), tuple(over2)), sols, witness)


def distribution_no_go(commutative: bool) -> MonoidNoGo:
    """delta_aa = delta_a delta_a is the image of half ab + half ba (Mon) or
    of half 2a + half 2b (CMon). The fibre over delta_a is
    {w delta_a + (1-w) delta_b}; the product conditions form a polynomial
    system in (w, y) that sympy shows has no solution in [0, 1]^2."""
    import sympy

    w, y = sympy.symbols("w y")
    half = sympy.Rational(1, 2)
    alpha1 = {"a": w, "b": 1 - w}
    alpha2 = {"a": y, "b": 1 - y}
    coeff: dict = {}
    for u, cu in alpha1.items():
        for v, cv in alpha2.items():
            key = "".join(sorted(u + v)) if commutative else u + v
            coeff[key] = coeff.get(key, 0) + cu * cv
    if commutative:
        target = {"aa": half, "bb": half}
    else:
        target = {"ab": half, "ba": half}
    eqs = [sympy.expand(coeff.get(k, 0) - target.get(k, 0)) for k in sorted(set(coeff) | set(target))]
    def admissible(sol: dict) -> bool:
        vals = [sol.get(w), sol.get(y)]
        if any(v is None or v.free_symbols for v in vals):
            return True  # a family of solutions: never discard it
        return all(v.is_real and 0 <= v <= 1 for v in vals)

    def solve():
        return [s for s in sympy.solve(eqs, [w, y], dict=True) if admissible(s)]

    raw = sympy.solve(eqs, [w, y], dict=True)
    sols = solve()
    name = "CMon" if commutative else "Mon"
    witness = Witness(
        f"{name}-distribution-lifting",
        {"alpha": target, "betas": ("delta_a", "delta_a")},
        True,
        bool(sols),
        {"equations": [str(e) + " = 0" for e in eqs], "rejected_solutions": [str(s) for s in raw]},
        lambda: (True, bool(solve())),
    )
    premises = {"fibre_parametrised": True}
    return MonoidNoGo("D", name, None, "delta_aa", ("delta_a", "delta_a"), target, premises, (), sols, witness)


# the table


COLUMNS = (
    ("Set", "L"), ("Set", "M"), ("Set", "D"), ("Set", "P"), ("Set", "Ult"), ("Set", "M_S"),
    ("KHaus", "V"), ("KHaus", "Rad"),
    ("JSL", "P"), ("Conv", "P"),
    ("Mon", "M"), ("Mon", "D"), ("Mon", "P"), ("Mon", "M_S"),
    ("CMon", "M"), ("CMon", "D"), ("CMon", "P"),
)  # fmt: skip
ROWS = ("P", "P*")

_YES = {("Set", c) for c in ("L", "M", "D", "P", "Ult", "M_S")} | {("KHaus", "V")}
EXPECTED = {
    (cat, col, row): ("yes" if (cat, col) in _YES or (cat, col, row) == ("KHaus", "Rad", "P*") else "no")
    for cat, col in COLUMNS
    for row in ROWS
}
OUT_OF_SCOPE = {
    ("Set", "Ult"): "topological",
    ("KHaus", "V"): "topological",
    ("KHaus", "Rad"): "topological",
    ("Set", "M_S"): "extension point",
    ("Mon", "M_S"): "extension point",
}


@dataclass(frozen=True)
class TableProfile:
    name: str
    sizes: tuple = (0, 1, 2)
    budget: Budget = Budget(maxden=2, maxlen=2, samples=None, seed=0)
    sampled: Budget = Budget(maxden=2, maxlen=2, samples=60, seed=0)
    lmax: int = 2
    conv_maxden: int = 2
    monotone_size: int = 2

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "sizes": list(self.sizes),
            "budget": self.budget.as_dict(),
            "sampled": self.sampled.as_dict(),
            "lmax": self.lmax,
            "conv_maxden": self.conv_maxden,
            "monotone_size": self.monotone_size,
        }


PROFILES = {
    "desk": TableProfile("desk"),
    "quick": TableProfile("quick", sizes=(0, 1), sampled=Budget(maxden=2, maxlen=2, samples=20, seed=0), monotone_size=1),
}


@dataclass
class Cell:
    category: str
    column: str
    row: str
    kind: str  # exists | nogo | out_of_scope | not_finitely_refutable | refuted
    verdicts: dict = field(default_factory=dict)
    witness: Witness | None = None
    reason: str = ""

    @property
    def mark(self) -> str:
        return {"exists": "yes", "nogo": "no", "refuted": "no"}.get(self.kind, "-")

    def to_json(self) -> dict:
        out = {"category": self.category, "column": self.column, "row": self.row, "kind": self.kind, "mark": self.mark}
        if self.verdicts:
            out["verdicts"] = self.verdicts
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass
class TableReport:
    profile: TableProfile
    cells: list
    extra: list = field(default_factory=list)

    def cell(self, category: str, column: str, row: str) -> Cell:
        return next(c for c in self.cells if (c.category, c.column, c.row) == (category, column, row))

    def mismatches(self) -> list:
        out = []
        for c in self.cells:
            if c.kind == "out_of_scope":
                continue
            if c.mark != EXPECTED[(c.category, c.column, c.row)]:
                out.append((c.category, c.column, c.row))
        return out

    @property
    def matches_expected(self) -> bool:
        return not self.mismatches()

    @property
    def inconclusive(self) -> bool:
        return any(
            v.status is Status.INCONCLUSIVE for c in self.cells if c.kind != "out_of_scope" for v in c.verdicts.values()
        )

    def to_json(self) -> dict:
        return {
            "profile": self.profile.as_dict(),
            "cells": self.cells,
            "supplementary": self.extra,
            "matches_expected": self.matches_expected,
            "mismatches": self.mismatches(),
        }

    def render_text(self) -> str:
        symbol = {"yes": "✓", "no": "✗", "-": "-"}
        head = ["", *[f"{cat}:{col}" for cat, col in COLUMNS]]
        lines = [" | ".join(head)]
        for row in ROWS:
            marks = []
            for cat, col in COLUMNS:
                c = self.cell(cat, col, row)
                marks.append(symbol[c.mark] if c.kind != "out_of_scope" else "(" + symbol[EXPECTED[(cat, col, row)]] + ")")
            lines.append(" | ".join([row, *marks]))
        if self.extra:
            marks = [f"Set:{c.column} " + {"not_finitely_refutable": "?"}.get(c.kind, symbol[c.mark]) for c in self.extra]
            lines.append(f"{self.extra[0].row} (supplementary): " + ", ".join(marks))
        lines.append("(x) = outside the finite checks, expected mark shown; ? = not finitely refutable")
        return "\n".join(lines) + "\n"


def preserves_surjections(T, f: FinFun, budget: Budget) -> Verdict:
    """T f is onto (within the budget slice) for a surjective f."""
    X, Y = f.dom.elems, f.cod.elems
    hit = {T.fmap(f, t) for t in T.enumerate(list(X), budget)}
    sweep = Sweep(T.exact, budget)
    for u in T.enumerate(list(Y), budget):
        sweep.checked += 1
        if u not in hit:
            sweep.fail({"missed": u})
            break
    return sweep.verdict()


def _set_cell(col: str, row: str, prof: TableProfile) -> Cell:
    T = MONADS[col]
    S = P if row == "P" else PSTAR
    law = canonical_law(T, S)
    budget = prof.budget if T.exact else prof.sampled
    report = axiom_report(law, prof.sizes, budget)
    verdicts = {a: report.verdicts[a] for a in ("unit+", "mult-", "mult+")}
    n = prof.monotone_size
    verdicts["monotone"] = check_monotone(law, range(n), range(n), prof.sampled if not T.exact else prof.budget)
    if row == "P*":
        onto = FinFun(FinSet(range(3)), FinSet(range(2)), {0: 0, 1: 1, 2: 1})
        verdicts["preserves_surjections"] = preserves_surjections(T, onto, prof.budget)
    kind = "exists" if all(v.holds for v in verdicts.values()) else "refuted"
    if any(v.status is Status.INCONCLUSIVE for v in verdicts.values()):
        kind = "inconclusive"
    return Cell("Set", col, row, kind, verdicts, None, "tested, not proved")


def table_report(profile: str | TableProfile = "desk") -> TableReport:
    prof = PROFILES[profile] if isinstance(profile, str) else profile
    cells = []
    # shared no-go evidence, computed once
    jsl = {row: search_preservation_counterexample([parity_map(4)], nonempty=(row == "P*")) for row in ROWS}
    _, conv_ex = collapse_segment_instance()
    f_conv = collapse_map()
    conv_base = check_affine_decomposable(f_conv, 3, prof.conv_maxden)
    subsets_ng = reproduce_mon_cmon(prof.lmax)
    mult_ng = {name: multiset_no_go(name == "CMon", prof.lmax) for name in ("Mon", "CMon")}
    dist_ng = {name: distribution_no_go(name == "CMon") for name in ("Mon", "CMon")}
    for cat, col in COLUMNS:
        for row in ROWS:
            if (cat, col) in OUT_OF_SCOPE:
                cells.append(Cell(cat, col, row, "out_of_scope", reason=OUT_OF_SCOPE[(cat, col)]))
            elif cat == "Set":
                cells.append(_set_cell(col, row, prof))
            elif cat == "JSL":
                w = jsl[row]
                kind = "nogo" if w is not None and w.replay() else "inconclusive"
                cells.append(Cell(cat, col, row, kind, {}, w, "lift of a decomposable map is not decomposable"))
            elif cat == "Conv":
                kind = "nogo" if conv_ex.replay() and conv_base.holds else "inconclusive"
                cells.append(Cell(cat, col, row, kind, {"base_decomposable": conv_base}, conv_ex,
                                  "segment admits no disintegration over the halving of its image"))
            else:
                ng = {"P": subsets_ng, "M": mult_ng, "D": dist_ng}[col][cat]
                kind = "nogo" if ng.confirmed else "inconclusive"
                cells.append(Cell(cat, col, row, kind, {}, ng.witness, "no lifting pair exists"))
    extra = [_finite_subsets_cell(col, prof) for col in ("L", "M", "D", "P")]
    return TableReport(prof, cells, extra)


def _finite_subsets_cell(col: str, prof: TableProfile) -> Cell:
    T = MONADS[col]
    f = FinFun(FinSet(range(2)), FinSet(range(1)), {0: 0, 1: 0})
    v = check_finite_preimage_preservation(T, f, prof.budget)
    if col == "D":
        return Cell("Set", col, PF.name, "not_finitely_refutable", {"finite_preimages": v},
                    None, "D f has uncountable fibres over every non-injective f; no finite carrier can show it")
    return Cell("Set", col, PF.name, "exists" if v.holds else "refuted", {"finite_preimages": v}, None,
                "tested, not proved")
