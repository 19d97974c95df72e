from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import powerset, pp_law
from strategies import pp_elements, subsets_of
from weaklaw.convex import DistHull
from weaklaw.finrel import FinFun, FinSet, ValidationError
from weaklaw.laws import (
    AXIOMS,
    DISTR_DP,
    DISTR_PP,
    axiom_report,
    canonical_law,
    canonical_law_by_filter,
    canonical_law_over_P,
    check_axiom,
    check_monotone,
    check_naturality,
    distrDP_eval,
    distrPP_eval,
    law_by_name,
)
from weaklaw.monads import D, L, M, OPT, P, PSTAR, Dist
from weaklaw.verdict import Budget, Status

FS = frozenset


def test_powerset_law_matches_choice_oracle_on_all_of_PP3():
    for E in powerset(powerset(range(3))):
        assert distrPP_eval(E) == pp_law(E)


@given(subsets_of(range(4)))
def test_singleton_input_gives_nonempty_subsets(A):
    assert distrPP_eval(FS([A])) == FS(s for s in powerset(A) if s)


def test_edge_inputs_of_the_powerset_law():
    assert distrPP_eval(FS()) == FS([FS()])
    assert distrPP_eval(FS([FS()])) == FS()
    assert distrPP_eval(FS([FS({0, 1})])) == FS([FS({0}), FS({1}), FS({0, 1})])


@pytest.mark.parametrize("T", [P, PSTAR, L, M, OPT], ids=lambda T: T.name)
def test_membership_span_by_filter_matches_direct_construction(T):
    from weaklaw.monads import tower

    ws, _ = tower([T, P], range(2), Budget(maxlen=2))
    for w in ws:
        assert canonical_law_by_filter(T, w, Budget(maxlen=2)) == canonical_law_over_P(T, w, Budget(maxlen=2))


def test_unit_minus_witness_for_the_powerset_law():
    v = check_axiom(DISTR_PP, "unit-", range(2))
    assert v.fails
    assert v.witness["input"] == FS({0, 1})
    assert v.witness["lhs"] == FS([FS({0}), FS({1}), FS({0, 1})])
    assert v.witness["rhs"] == FS([FS({0}), FS({1})])


FROZEN_CLASSES = {
    "distrPP": "weak distributive law (tested)",
    "distrDP": "weak distributive law (tested)",
    "canonicalP:P": "weak distributive law (tested)",
    "canonicalP:P*": "weak distributive law (tested)",
    "canonicalP:D": "weak distributive law (tested)",
    "canonicalP:Opt": "strict distributive law (tested)",
    "canonicalP:L": "strict distributive law (tested)",
    "canonicalP:M": "strict distributive law (tested)",
}


@pytest.mark.parametrize("name", sorted(FROZEN_CLASSES))
def test_axiom_classification(name):
    report = axiom_report(law_by_name(name), (0, 1, 2), Budget(samples=40))
    assert report.classification == FROZEN_CLASSES[name]


def test_law_names_are_a_closed_vocabulary():
    with pytest.raises(ValidationError):
        law_by_name("distrLP")
    with pytest.raises(ValidationError):
        law_by_name("canonicalP:Q")
    with pytest.raises(ValidationError):
        check_axiom(DISTR_PP, "unit*", range(1))
    with pytest.raises(ValidationError):
        canonical_law(P, D)


def test_distribution_law_on_the_point_mass_at_a_pair():
    out = distrDP_eval(Dist.delta(FS({0, 1})))
    assert out == DistHull([Dist.delta(0), Dist.delta(1)])
    assert out.contains(Dist({0: Fraction(1, 3), 1: Fraction(2, 3)}))
    assert distrDP_eval(Dist({FS(): Fraction(1, 2), FS({0}): Fraction(1, 2)})).empty


@given(st.integers(1, 3), st.integers(0, 3))
def test_distribution_law_on_a_single_set_is_the_face(k, extra):
    A = FS(range(k))
    hull = distrDP_eval(Dist.delta(A))
    assert hull.vertices == FS(Dist.delta(x) for x in A)


@pytest.mark.parametrize("which", AXIOMS[1:])
def test_distribution_law_axioms_hold_when_sampled(which):
    v = check_axiom(DISTR_DP, which, range(2), Budget(maxden=2, samples=40))
    assert v.holds


@given(pp_elements(3), st.lists(st.integers(0, 1), min_size=3, max_size=3))
def test_powerset_law_is_natural(E, table):
    f = lambda x: table[x]  # noqa: E731
    lhs, rhs = DISTR_PP.natural_legs(f, E)
    assert lhs == rhs


def test_naturality_sweeps_all_maps_between_small_sets():
    for n, m in product(range(3), range(1, 3)):
        for values in product(range(m), repeat=n):
            f = FinFun(FinSet(range(n)), FinSet(range(m)), dict(enumerate(values)))
            assert check_naturality(DISTR_PP, f).status is Status.HOLDS_EXHAUSTIVE


def test_naturality_on_an_empty_domain():
    f = FinFun(FinSet(), FinSet([0]), {})
    assert check_naturality(DISTR_PP, f).holds


def test_powerset_law_is_monotone():
    assert check_monotone(DISTR_PP, range(2), range(2)).holds
