from fractions import Fraction
from itertools import product

import pytest
from oracles import labelled_jsls
from weaklaw.algebra import (
    AlgMorphism,
    JoinSemilattice,
    TruncatedMonoid,
    all_lattices,
    chain,
    check_algebra,
    check_morphism,
    convex_algebra,
    free_algebra,
    free_morphism,
    greatest_in_fibres,
    is_decomposable,
    is_decomposable_jsl,
    jsl_from_order,
    morphism,
    powerset_lattice,
    simplex,
)
from weaklaw.finrel import FinFun, FinSet, ValidationError
from weaklaw.monads import D, L, M, P
from weaklaw.verdict import Budget, Status

FS = frozenset


@pytest.mark.parametrize("n", range(4))
def test_labelled_lattice_counts_match_oracle(n):
    assert len(all_lattices(n)) == len(labelled_jsls(n))


def test_lattices_satisfy_their_axioms():
    for n in range(1, 4):
        for A in all_lattices(n):
            assert A.axioms().status is Status.HOLDS_EXHAUSTIVE
            assert check_algebra(A.algebra()).status is Status.HOLDS_EXHAUSTIVE


def test_bad_presentations_are_rejected():
    with pytest.raises(ValidationError):
        jsl_from_order([0, 1, 2], lambda a, b: a == b or (a == 0))
    assert JoinSemilattice([0, 1], {(0, 1): 1, (1, 0): 0}).axioms().fails
    with pytest.raises(ValidationError):
        TruncatedMonoid(("a",), -1)


def test_broken_join_table_is_caught():
    A = JoinSemilattice([0, 1, 2], {(0, 1): 1, (0, 2): 2, (1, 2): 2, (2, 1): 1}, bottom=0)
    assert A.axioms().fails


def test_free_algebras_are_algebras():
    assert check_algebra(free_algebra(P, range(2))).status is Status.HOLDS_EXHAUSTIVE
    assert check_algebra(free_algebra(L, "ab", 2), Budget(maxlen=2, samples=60)).holds
    assert check_algebra(free_algebra(M, "ab", 2), Budget(maxlen=2, samples=60)).holds
    assert check_algebra(free_algebra(D, range(3)), Budget(maxden=2, samples=40)).holds


def test_a_map_that_is_not_a_structure_map_fails():
    A = chain(2)
    bogus = JoinSemilattice([0, 1], lambda a, b: min(a, b), bottom=1)
    assert check_algebra(bogus.algebra()).holds  # (2, min) is a lattice in its own right
    not_morphism = morphism(A.algebra(), A.algebra(), lambda x: 1 - x)
    assert check_morphism(not_morphism).fails


def _morphisms(A, B):
    for values in product(B.elements, repeat=len(A.elements)):
        table = dict(zip(A.elements, values))
        f = morphism(A.algebra(), B.algebra(), table.__getitem__)
        if check_morphism(f).holds:
            yield table, f


def test_decomposability_routes_agree_on_all_small_morphisms():
    lattices = [L for n in range(1, 4) for L in all_lattices(n)] + [powerset_lattice(range(2))]
    seen = {True: 0, False: 0}
    for A in lattices:
        for B in lattices:
            for table, f in _morphisms(A, B):
                brute = is_decomposable(f)
                special = is_decomposable_jsl(table.__getitem__, A, B)
                assert brute.holds == special.holds, (A, B, table)
                seen[brute.holds] += 1
    assert seen[True] and seen[False]


def test_greatest_in_fibres():
    A = powerset_lattice(range(2))
    # the join of a fibre need not stay in it when f is not a morphism
    top = greatest_in_fibres(lambda e: len(e), A, FS({0, 1}))
    assert top == {0: FS(), 1: FS({0, 1}), 2: FS({0, 1})}
    top = greatest_in_fibres(lambda e: e & {0}, A, FS({1}))
    assert top == {FS(): FS({1})}


def test_free_morphisms_are_decomposable():
    for values in product(range(2), repeat=3):
        f = FinFun(FinSet(range(3)), FinSet(range(2)), dict(enumerate(values)))
        Ff = free_morphism(P, f)
        assert check_morphism(Ff).holds
        v = is_decomposable_jsl(Ff.fn, powerset_lattice(range(3)), powerset_lattice(range(2)))
        assert v.status is Status.HOLDS_EXHAUSTIVE
        assert is_decomposable(Ff).status is Status.HOLDS_EXHAUSTIVE


def test_inclusion_of_a_non_down_closed_sublattice_is_not_decomposable():
    A = chain(3)
    sub = JoinSemilattice([0, 2], {(0, 2): 2}, bottom=0)
    inc = AlgMorphism(sub.algebra(), A.algebra(), lambda x: x)
    v = is_decomposable(inc)
    assert v.fails and v.witness["x"] == 2


def test_truncated_monoid_products():
    W = TruncatedMonoid(("a", "b"), 2)
    a, b = W.letter("a"), W.letter("b")
    assert W.mul(a, b) == ("a", "b") != W.mul(b, a)
    C = TruncatedMonoid(("a", "b"), 2, commutative=True)
    assert C.mul(C.letter("a"), C.letter("b")) == C.mul(C.letter("b"), C.letter("a"))
    assert len(W.elements) == 7 and len(C.elements) == 6


def test_convex_algebra_of_a_simplex():
    S = simplex(2)
    A = convex_algebra(S)
    assert A.eval(D.unit((Fraction(1, 2), Fraction(1, 2)))) == (Fraction(1, 2), Fraction(1, 2))
    assert check_algebra(A, Budget(maxden=2, samples=30)).status is Status.HOLDS_SAMPLED
