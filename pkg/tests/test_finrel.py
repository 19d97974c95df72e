from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import finfuns, relations
from weaklaw.finrel import (
    FinFun,
    FinRel,
    FinSet,
    Square,
    ValidationError,
    ckey,
    compose_rel,
    csorted,
    dagger,
    graph,
    identity,
    image_factorize,
    is_near_pullback,
    legs,
    near_pullback_by_relations,
    pullback,
    rel_identity,
    rel_leq,
)


def test_canonical_order_is_size_first():
    sets = [frozenset({2}), frozenset(), frozenset({0, 1}), frozenset({0})]
    assert csorted(sets) == [frozenset(), frozenset({0}), frozenset({2}), frozenset({0, 1})]
    assert ckey(1) < ckey("a") < ckey((0,)) < ckey(frozenset())
    assert csorted([Fraction(1, 2), 0, 1]) == [0, Fraction(1, 2), 1]


def test_empty_set_is_an_ordinary_object():
    E = FinSet()
    f = FinFun(E, FinSet([0]), {})
    assert len(E) == 0 and f.is_injective() and not f.is_surjective()
    assert identity(E) == FinFun(E, E, {})


def test_partial_or_escaping_functions_are_rejected():
    X, Y = FinSet([0, 1]), FinSet([0])
    with pytest.raises(ValidationError):
        FinFun(X, Y, {0: 0})
    with pytest.raises(ValidationError):
        FinFun(X, Y, {0: 0, 1: 5})
    with pytest.raises(ValidationError):
        FinRel(X, Y, [(0, 1)])


@given(finfuns())
def test_image_factorisation_recomposes(f):
    onto, incl = image_factorize(f)
    assert onto.is_surjective() and incl.is_injective()
    assert onto.then(incl) == f


@given(st.data())
def test_relation_composition_is_associative_and_dagger_reverses(data):
    X, Y, Z, W = (FinSet(range(data.draw(st.integers(0, 3)))) for _ in range(4))
    r = data.draw(relations(X, Y))
    s = data.draw(relations(Y, Z))
    t = data.draw(relations(Z, W))
    assert compose_rel(compose_rel(r, s), t) == compose_rel(r, compose_rel(s, t))
    assert dagger(compose_rel(r, s)) == compose_rel(dagger(s), dagger(r))
    assert dagger(dagger(r)) == r
    assert compose_rel(rel_identity(X), r) == r == compose_rel(r, rel_identity(Y))


@given(finfuns())
def test_graph_is_total_and_single_valued(f):
    g = graph(f)
    assert rel_leq(rel_identity(f.dom), compose_rel(g, dagger(g)))
    assert rel_leq(compose_rel(dagger(g), g), rel_identity(f.cod))


@given(relations())
def test_relation_is_recovered_from_its_tabulating_span(r):
    left, right = legs(r)
    assert compose_rel(dagger(graph(left)), graph(right)) == r


@given(st.data())
def test_pullbacks_are_near_pullbacks_by_both_routes(data):
    g1 = data.draw(finfuns(3))
    X2 = FinSet(range(data.draw(st.integers(0, 3))))
    g2 = FinFun(X2, g1.cod, {x: data.draw(st.sampled_from(g1.cod.elems)) for x in X2})
    apex, p1, p2 = pullback(g1, g2)
    sq = Square(p1, p2, g1, g2)
    assert is_near_pullback(sq) and near_pullback_by_relations(sq)
    # dropping apex points breaks both readings together
    keep = data.draw(st.lists(st.sampled_from(apex.elems), unique=True)) if len(apex) else []
    sub = FinSet(keep)
    sq2 = Square(
        FinFun(sub, p1.cod, {p: p1(p) for p in sub}),
        FinFun(sub, p2.cod, {p: p2(p) for p in sub}),
        g1,
        g2,
    )
    assert is_near_pullback(sq2) == near_pullback_by_relations(sq2) == (len(sub) == len(apex))


def test_non_commuting_square_is_rejected():
    X, Y = FinSet([0]), FinSet([0, 1])
    f = FinFun(X, Y, {0: 0})
    g = FinFun(X, Y, {0: 1})
    with pytest.raises(ValidationError):
        Square(f, g, identity(Y), identity(Y))
