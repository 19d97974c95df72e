"""Algebras for the monads in three presentations (join-semilattices for P,
convex polytopes for D, truncated monoids for L and M), morphism checks and
decomposability tests."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Any, Callable, Iterable, Sequence

from .finrel import FinFun, FinSet, ValidationError, csorted
from .lp import EQ, Constraint, LPResult, PolytopeQ, lp_feasible
from .monads import D, L, M, P, Dist, MonadSpec, Multiset, enumerate_T, subsets, tower_inputs
from .verdict import Budget, Sweep, Verdict, fails, inconclusive


class OutOfRange(ArithmeticError):
    """A product in a truncated monoid leaves the truncation."""


@dataclass(frozen=True)
class AlgebraSpec:
    """A monad algebra (carrier, structure map) in one of the presentations."""

    monad: MonadSpec
    carrier: Any
    eval: Callable[[Any], Any]
    name: str = ""

    def points(self, budget: Budget | None = None) -> list:
        """Carrier elements to quantify over (all of them when finite)."""
        if isinstance(self.carrier, FinSet):
            return list(self.carrier)
        return grid_points(self.carrier, (budget or Budget()).maxden)

    @property
    def finite(self) -> bool:
        return isinstance(self.carrier, FinSet)


# join-semilattices


class JoinSemilattice:
    """A finite complete join-semilattice: a binary join with a least element.

    `join2` may be a table {(a, b): c} or a function; joins of arbitrary
    subsets are folds starting from the bottom.
    """

    def __init__(self, elements: Iterable, join2, bottom=None, name: str = ""):
        self.elements = tuple(csorted(set(elements)))
        self.carrier = FinSet(self.elements)
        if isinstance(join2, dict):
            table = dict(join2)
            for a in self.elements:
                table.setdefault((a, a), a)
            for (a, b), c in list(table.items()):
                table.setdefault((b, a), c)
            self._join = lambda a, b: table[(a, b)]
            self.table = table
        else:
            self._join = join2
            self.table = None
        if bottom is None:
            bottom = self._find_bottom()
        self.bottom = bottom
        self.name = name

    def _find_bottom(self):
        for z in self.elements:
            if all(self._join(z, x) == x for x in self.elements):
                return z
        raise ValidationError("join table has no least element")

    def join(self, a, b):
        return self._join(a, b)

    def join_all(self, xs: Iterable):
        return reduce(self._join, xs, self.bottom)

    def leq(self, a, b) -> bool:
        return self._join(a, b) == b

    def down(self, x) -> list:
        return [y for y in self.elements if self.leq(y, x)]

    def algebra(self) -> AlgebraSpec:
        return AlgebraSpec(P, self.carrier, self.join_all, self.name or "jsl")

    def axioms(self) -> Verdict:
        """Idempotent, commutative, associative, with the bottom as unit."""
        sweep = Sweep(True)
        els = self.elements
        for a in els:
            sweep.checked += 1
            if self.join(a, a) != a:
                return fails(sweep.checked, {"law": "idempotent", "elements": [a]})
            if self.join(self.bottom, a) != a:
                return fails(sweep.checked, {"law": "bottom", "elements": [a]})
            for b in els:
                if self.join(a, b) not in self.carrier:
                    return fails(sweep.checked, {"law": "closed", "elements": [a, b]})
                if self.join(a, b) != self.join(b, a):
                    return fails(sweep.checked, {"law": "commutative", "elements": [a, b]})
                for c in els:
                    sweep.checked += 1
                    if self.join(self.join(a, b), c) != self.join(a, self.join(b, c)):
                        return fails(sweep.checked, {"law": "associative", "elements": [a, b, c]})
        return sweep.verdict()

    def __repr__(self) -> str:
        return f"JoinSemilattice({self.name or list(self.elements)})"


def jsl_from_order(elements: Sequence, leq: Callable[[Any, Any], bool], name: str = "") -> JoinSemilattice:
    table = {}
    for a in elements:
        for b in elements:
            ubs = [c for c in elements if leq(a, c) and leq(b, c)]
            least = [c for c in ubs if all(leq(c, d) for d in ubs)]
            if len(least) != 1:
                raise ValidationError(f"{a!r} and {b!r} have no least upper bound")
            table[(a, b)] = least[0]
    return JoinSemilattice(elements, table, name=name)


def all_lattices(n: int) -> list[JoinSemilattice]:
    """Every join-semilattice-with-bottom structure on the labels 0..n-1."""
    els = list(range(n))
    pairs = [(a, b) for a in els for b in els if a != b]
    found = []
    for bits in product((False, True), repeat=len(pairs)):
        rel = {p for p, bit in zip(pairs, bits) if bit} | {(a, a) for a in els}
        if any((b, a) in rel for a, b in rel if a != b):
            continue
        if any((a, d) not in rel for a, b in rel for c, d in rel if b == c):
            continue
        try:
            lat = jsl_from_order(els, lambda a, b: (a, b) in rel, name=f"L{n}")
            lat._find_bottom()
        except ValidationError:
            continue
        found.append(lat)
    return found


def chain(n: int) -> JoinSemilattice:
    return JoinSemilattice(range(n), {(a, b): max(a, b) for a in range(n) for b in range(n)}, 0, f"chain{n}")


def powerset_lattice(X: Iterable) -> JoinSemilattice:
    """The free P-algebra (PX, union)."""
    return JoinSemilattice(subsets(X), lambda a, b: a | b, frozenset(), "P" + str(len(set(X))))


def product_lattice(A: JoinSemilattice, B: JoinSemilattice, elements: Iterable | None = None) -> JoinSemilattice:
    els = elements if elements is not None else [(a, b) for a in A.elements for b in B.elements]
    return JoinSemilattice(
        els, lambda p, q: (A.join(p[0], q[0]), B.join(p[1], q[1])), (A.bottom, B.bottom), "product"
    )


# convex algebras


def grid_points(poly: PolytopeQ, maxden: int) -> list[tuple]:
    """Barycenters of the vertices with weights of denominator maxden."""
    verts = list(poly.vertices)
    out = set()
    for d in enumerate_T(D, range(len(verts)), Budget(maxden=maxden)):
        out.add(tuple(sum(w * verts[i][k] for i, w in d.items()) for k in range(poly.dim)))
    return sorted(out)


def barycenter(d: Dist) -> tuple:
    dim = len(next(iter(d.support)))
    return tuple(sum(w * Fraction(p[k]) for p, w in d.items()) for k in range(dim))


def convex_algebra(poly: PolytopeQ, name: str = "") -> AlgebraSpec:
    return AlgebraSpec(D, poly, barycenter, name or "polytope")


def simplex(n: int) -> PolytopeQ:
    return PolytopeQ(n, [tuple(int(i == j) for j in range(n)) for i in range(n)])


# truncated monoids


@dataclass(frozen=True)
class TruncatedMonoid:
    """Free (commutative) monoid on `alphabet`, keeping elements of length <= lmax.

    Words are tuples; commutative elements are Multisets. Products past
    the truncation raise OutOfRange.
    """

    alphabet: tuple
    lmax: int
    commutative: bool = False

    def __post_init__(self):
        if self.lmax < 0:
            raise ValidationError("truncation must be nonnegative")

    @property
    def elements(self) -> list:
        if self.lmax == 0:
            return [self.unit()]
        return enumerate_T(M if self.commutative else L, self.alphabet, Budget(maxlen=self.lmax))

    def length(self, w) -> int:
        return w.size if self.commutative else len(w)

    def unit(self):
        return Multiset() if self.commutative else ()

    def letter(self, a):
        return Multiset([a]) if self.commutative else (a,)

    def mul(self, u, v):
        if self.length(u) + self.length(v) > self.lmax:
            raise OutOfRange(f"product of length {self.length(u) + self.length(v)} exceeds {self.lmax}")
        if self.commutative:
            acc = dict(u.items())
            for x, n in v.items():
                acc[x] = acc.get(x, 0) + n
            return Multiset(acc)
        return u + v

    def mul_all(self, ws: Iterable):
        return reduce(self.mul, ws, self.unit())

    def set_product(self, U: Iterable, V: Iterable) -> frozenset:
        """Elementwise product of two subsets, or OutOfRange if any product is."""
        return frozenset(self.mul(u, v) for u in U for v in V)

    def extend(self, f: Callable, target: "TruncatedMonoid") -> Callable:
        """The monoid morphism generated by a map on letters."""
        if self.commutative:
            return lambda w: target.mul_all(f(x) for x, n in w.items() for _ in range(n))
        return lambda w: target.mul_all(f(x) for x in w)

    def algebra(self) -> AlgebraSpec:
        T = M if self.commutative else L
        if self.commutative:
            ev = lambda m: self.mul_all(x for x, n in m.items() for _ in range(n))  # noqa: E731
        else:
            ev = self.mul_all
        return AlgebraSpec(T, FinSet(self.elements), ev, ("CMon" if self.commutative else "Mon") + f"<={self.lmax}")


# free algebras


def free_algebra(T: MonadSpec, X: Iterable, lmax: int = 2) -> AlgebraSpec:
    X = csorted(set(X))
    if T.kind == "powerset" and T.name == "P":
        return powerset_lattice(X).algebra()
    if T.kind == "distribution":
        return convex_algebra(simplex(len(X)), f"simplex{len(X)}")
    if T.kind in ("list", "multiset"):
        return TruncatedMonoid(tuple(X), lmax, T.kind == "multiset").algebra()
    raise ValidationError(f"no free-algebra presentation for {T.name}")


# checks


def _safe(f, *args):
    try:
        return f(*args)
    except OutOfRange:
        return OutOfRange


def check_algebra(A: AlgebraSpec, budget: Budget | None = None) -> Verdict:
    """a . unit = id and a . T a = a . mult, on all (or sampled) inputs.

    Inputs whose evaluation leaves a truncation are skipped.
    """
    budget = budget or Budget()
    T = A.monad
    pts = A.points(budget)
    exact = A.finite
    sweep = Sweep(exact, budget)
    for x in pts:
        sweep.checked += 1
        if _safe(A.eval, T.unit(x)) != x:
            sweep.fail({"law": "unit", "element": x})
            return sweep.verdict()
    inputs, tower_exact = tower_inputs([T, T], pts, budget)
    sweep.exact = exact and tower_exact
    for tt in inputs:
        inner = _safe(lambda t: T.fmap(A.eval, t), tt)
        lhs = OutOfRange if inner is OutOfRange else _safe(A.eval, inner)
        rhs = _safe(A.eval, T.mult(tt))
        if lhs is OutOfRange or rhs is OutOfRange:
            continue
        sweep.checked += 1
        if lhs != rhs:
            sweep.fail({"law": "associativity", "element": tt, "lhs": lhs, "rhs": rhs})
            break
    return sweep.verdict()


@dataclass(frozen=True)
class AlgMorphism:
    source: AlgebraSpec
    target: AlgebraSpec
    fn: Callable[[Any], Any]

    def __call__(self, x):
        return self.fn(x)


def morphism(A: AlgebraSpec, B: AlgebraSpec, fn) -> AlgMorphism:
    if A.monad is not B.monad:
        raise ValidationError("source and target are algebras for different monads")
    return AlgMorphism(A, B, fn)


def check_morphism(f: AlgMorphism, budget: Budget | None = None) -> Verdict:
    budget = budget or Budget()
    A, B, T = f.source, f.target, f.source.monad
    pts = A.points(budget)
    inputs, exact = tower_inputs([T], pts, budget)
    sweep = Sweep(exact and A.finite, budget)
    for t in inputs:
        lhs = _safe(lambda s: f(A.eval(s)), t)
        rhs = _safe(lambda s: B.eval(T.fmap(f.fn, s)), t)
        if lhs is OutOfRange or rhs is OutOfRange:
            continue
        sweep.checked += 1
        if lhs != rhs:
            sweep.fail({"input": t, "lhs": lhs, "rhs": rhs})
            break
    return sweep.verdict()


def free_morphism(T: MonadSpec, f: FinFun) -> AlgMorphism:
    """T f as a morphism between free algebras (powerset presentation)."""
    if T.name != "P":
        raise ValidationError("free morphisms are built for P here")
    A, B = free_algebra(P, f.dom.elems), free_algebra(P, f.cod.elems)
    return AlgMorphism(A, B, lambda e: frozenset(f(x) for x in e))


DECOMPOSE_LIMIT = 1 << 17


def is_decomposable(f: AlgMorphism, budget: Budget | None = None) -> Verdict:
    """Brute force: for all x in A and u in TB with f(x) = b(u) there is
    t in TA with (T f)(t) = u and a(t) = x.

    All t are enumerated once and indexed by (T f(t), a(t)).
    """
    budget = budget or Budget()
    A, B, T = f.source, f.target, f.source.monad
    if not (A.finite and B.finite):
        return inconclusive(0, "decomposability over infinite carriers is checked per instance")
    if T.exact and 2 ** max(len(A.carrier), len(B.carrier)) > DECOMPOSE_LIMIT:
        return inconclusive(0, "carrier too large for brute-force enumeration")
    reached = set()
    for t in T.enumerate(list(A.carrier), budget):
        a_t = _safe(A.eval, t)
        if a_t is OutOfRange:
            continue
        reached.add((T.fmap(f.fn, t), a_t))
    sweep = Sweep(T.exact, budget)
    TB = [u for u in T.enumerate(list(B.carrier), budget)]
    b_of = {u: _safe(B.eval, u) for u in TB}
    for x in A.carrier:
        fx = f(x)
        for u in TB:
            if b_of[u] is OutOfRange or b_of[u] != fx:
                continue
            sweep.checked += 1
            if (u, x) not in reached:
                sweep.fail({"x": x, "u": u})
                return sweep.verdict()
    return sweep.verdict()


def decomposition_gap(f_fn: Callable, A: JoinSemilattice, B: JoinSemilattice, x, u: Iterable):
    """None if u (a subset of B with join f(x)) lifts to a subset of A
    with join x, otherwise the reason. Uses the greatest candidate below x
    in each fibre."""
    below = [y for y in A.elements if A.leq(y, x)]
    parts = []
    for b in csorted(u):
        fibre = [y for y in below if f_fn(y) == b]
        if not fibre:
            return {"missing": b}
        parts.append(A.join_all(fibre))
    if A.join_all(parts) != x:
        return {"join_of_greatest": A.join_all(parts)}
    return None


def greatest_in_fibres(f_fn: Callable, A: JoinSemilattice, x) -> dict:
    """For each value b of f below f(x), the join of {y <= x : f(y) = b}."""
    out: dict = {}
    for y in A.elements:
        if A.leq(y, x):
            b = f_fn(y)
            out[b] = A.join(out[b], y) if b in out else y
    return out


def is_decomposable_jsl(f_fn: Callable, A: JoinSemilattice, B: JoinSemilattice) -> Verdict:
    """Join-semilattice specialisation: families reduce to subsets u of B,
    and u lifts iff the greatest elements below x in the fibres over u
    join to x."""
    sweep = Sweep(True)
    by_join: dict = {}
    for u in subsets(B.elements):
        by_join.setdefault(B.join_all(u), []).append(u)
    for x in A.elements:
        families = by_join.get(f_fn(x), ())
        if not families:
            continue
        top = greatest_in_fibres(f_fn, A, x)
        for u in families:
            sweep.checked += 1
            missing = [b for b in csorted(u) if b not in top]
            if missing:
                sweep.fail({"x": x, "u": u, "missing": missing[0]})
                return sweep.verdict()
            joined = A.join_all(top[b] for b in csorted(u))
            if joined != x:
                sweep.fail({"x": x, "u": u, "join_of_greatest": joined})
                return sweep.verdict()
    return sweep.verdict()


def is_join_closed_relation(pairs: frozenset, A: JoinSemilattice, B: JoinSemilattice) -> bool:
    """Contains (bottom, bottom) and is closed under binary joins."""
    if (A.bottom, B.bottom) not in pairs:
        return False
    return all((A.join(a, c), B.join(b, d)) in pairs for a, b in pairs for c, d in pairs)


def is_decomposable_relation(pairs: frozenset, A: JoinSemilattice, B: JoinSemilattice) -> Verdict:
    """A join-closed relation R between A and B, read as a span, has a
    decomposable left leg: whenever x = join of a family (x_i) and (x, y)
    in R, there are y_i with (x_i, y_i) in R and join y_i = y."""
    sweep = Sweep(True)
    if not is_join_closed_relation(pairs, A, B):
        return fails(0, {"reason": "not closed under joins"})
    for x, y in csorted(pairs):
        for u in subsets(A.elements):
            if A.join_all(u) != x:
                continue
            sweep.checked += 1
            parts = []
            for a in csorted(u):
                below = [y2 for a2, y2 in pairs if a2 == a and B.leq(y2, y)]
                if not below:
                    break
                parts.append(B.join_all(below))
            else:
                if B.join_all(parts) == y:
                    continue
            sweep.fail({"pair": (x, y), "family": u})
            return sweep.verdict()
    return sweep.verdict()


# convex disintegration


@dataclass(frozen=True)
class DisintegrationResult:
    feasible: bool
    points: tuple | None
    lp: LPResult
    constraints: tuple
    nvars: int


def is_decomposable_convex_instance(
    psi: PolytopeQ, d1: int, x: Sequence, weights: Sequence, parts: Sequence[Sequence], y: Sequence
) -> DisintegrationResult:
    """Exists y_i with (x_i, y_i) in psi and sum_i w_i y_i = y?

    psi is a convex relation inside Q^(d1 + d2), given by vertices. The
    unknowns are convex weights theta_ik writing (x_i, y_i) over psi's
    vertices, so the question is a single exact LP.
    """
    weights = [Fraction(w) for w in weights]
    x = [Fraction(c) for c in x]
    y = [Fraction(c) for c in y]
    if sum(weights) != 1 or any(w < 0 for w in weights) or len(weights) != len(parts):
        raise ValidationError("disintegration weights must be nonnegative and sum to 1")
    for k in range(d1):
        if sum(w * Fraction(p[k]) for w, p in zip(weights, parts)) != x[k]:
            raise ValidationError("the parts do not average to x")
    if not psi.contains(tuple(x) + tuple(y)):
        raise ValidationError("(x, y) is not in the relation")
    verts = psi.vertices
    nv, n = len(verts), len(parts)
    d2 = psi.dim - d1
    nvars = nv * n
    cons = []

    def row(i: int, coeffs_by_vertex: Sequence) -> list:
        out = [Fraction(0)] * nvars
        for k, c in enumerate(coeffs_by_vertex):
            out[i * nv + k] = Fraction(c)
        return out

    for i, p in enumerate(parts):
        cons.append(Constraint.make(row(i, [1] * nv), EQ, 1))
        for k in range(d1):
            cons.append(Constraint.make(row(i, [v[k] for v in verts]), EQ, p[k]))
    for k in range(d2):
        coeffs = [Fraction(0)] * nvars
        for i in range(n):
            for j, v in enumerate(verts):
                coeffs[i * nv + j] += weights[i] * v[d1 + k]
        cons.append(Constraint.make(coeffs, EQ, y[k]))
    res = lp_feasible(cons, nvars, [True] * nvars)
    points = None
    if res.feasible:
        theta = res.point
        points = tuple(
            tuple(sum(theta[i * nv + j] * v[d1 + k] for j, v in enumerate(verts)) for k in range(d2)) for i in range(n)
        )
    return DisintegrationResult(res.feasible, points, res, tuple(cons), nvars)
