from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import lp_feasible_float, pp_law, yb_legs_pp
from strategies import pp_elements
from weaklaw.algebra import all_lattices, chain, powerset_lattice, simplex
from weaklaw.finrel import ValidationError
from weaklaw.laws import DISTR_PP, canonical_law, law_by_name
from weaklaw.lp import EQ, GE, LE, PolytopeQ
from weaklaw.monads import P
from weaklaw.nogo import (
    COLUMNS,
    EXPECTED,
    OUT_OF_SCOPE,
    ROWS,
    LatticeMap,
    Witness,
    check_affine_decomposable,
    collapse_map,
    collapse_segment_instance,
    distribution_no_go,
    multiset_no_go,
    parity_map,
    pi_yang_baxter_check,
    pi_yb_legs,
    reproduce_mon_cmon,
    search_conv_counterexample,
    search_preservation_counterexample,
    singleton_lifting_test,
    table_report,
    triangle_points,
    yang_baxter_check,
    yb_legs,
)
from weaklaw.serial import dumps
from weaklaw.verdict import Budget, Status

FS = frozenset
H = Fraction(1, 2)
PP3 = (DISTR_PP, DISTR_PP, DISTR_PP)


def test_witness_replay_detects_tampering():
    w = Witness("demo", 3, 9, 10, recompute=lambda: (9, 10))
    assert w.replay()
    assert not Witness("demo", 3, 9, 11, recompute=lambda: (9, 10)).replay()
    assert not Witness("demo", 3, 9, 9, recompute=lambda: (9, 9)).replay()
    assert not Witness("demo", 3, 9, 10).replay()
    assert Witness("demo", 3, 1, FS({2}), recompute=lambda: (1, FS({2})), relation="not in").replay()


# singleton test


@pytest.mark.parametrize("A", [powerset_lattice(range(2)), powerset_lattice(range(3))], ids=lambda A: A.name)
def test_singleton_test_holds_on_powerset_lattices(A):
    r = singleton_lifting_test(A)
    assert r.holds and r.singleton_in and not r.nonempty_subsets_in
    assert r.witness.replay()
    member = r.witness.data["member"]
    assert member in pp_law([FS(A.elements)])


def test_singleton_test_on_chains_and_points():
    # in a chain every subset is join-closed
    assert not singleton_lifting_test(chain(3)).holds
    assert not singleton_lifting_test(PolytopeQ(1, [(0,)])).holds


def test_singleton_test_on_the_unit_segment():
    r = singleton_lifting_test(simplex(2))
    assert r.holds and r.witness.replay()


def test_singleton_test_rejects_other_inputs():
    with pytest.raises(ValidationError):
        singleton_lifting_test("P2")


# hexagons


@given(st.frozensets(pp_elements(2), max_size=3))
def test_hexagon_legs_match_the_set_oracle(w):
    assert yb_legs(*PP3, w) == yb_legs_pp(w)


@given(st.frozensets(pp_elements(2), max_size=3))
def test_hexagon_legs_by_two_presentations_of_the_law(w):
    # the membership-span law over P and the closed formula give the same legs
    canon = canonical_law(P)
    assert yb_legs(canon, canon, canon, w) == yb_legs(*PP3, w)
    assert pi_yb_legs(canon, canon, canon, w) == pi_yb_legs(*PP3, w)


def test_yang_baxter_least_witness_on_two_points():
    v, w = yang_baxter_check(*PP3, range(2), Budget())
    assert v.fails and w.replay()
    assert w.input == FS([FS([FS({0, 1})])])
    assert (len(w.lhs), len(w.rhs)) == (6, 7)


def test_yang_baxter_already_fails_over_the_empty_set():
    v, w = yang_baxter_check(*PP3, range(0), Budget())
    assert v.fails and w.input == FS([FS(), FS([FS()])])
    assert yb_legs_pp(w.input) == (FS(), FS([FS()]))


@pytest.mark.parametrize("n", range(3))
def test_pi_hexagon_fails(n):
    v, w = pi_yang_baxter_check(*PP3, range(n), Budget())
    assert v.fails and w.replay()


@pytest.mark.parametrize("n", range(3))
def test_option_triple_satisfies_both_hexagons(n):
    opt = law_by_name("canonicalP:Opt")
    for check in (yang_baxter_check, pi_yang_baxter_check):
        v, w = check(opt, DISTR_PP, opt, range(n), Budget())
        assert v.status is Status.HOLDS_EXHAUSTIVE and w is None


def test_mismatched_triples_are_rejected():
    opt = law_by_name("canonicalP:Opt")
    with pytest.raises(ValidationError):
        yang_baxter_check(opt, opt, opt, range(1))


def test_singleton_test_implies_hexagon_failure():
    verdict, _ = yang_baxter_check(*PP3, range(2), Budget())
    for A in [powerset_lattice(range(2))] + all_lattices(3):
        if singleton_lifting_test(A).holds:
            assert verdict.fails


# lifted decomposability on join-semilattices


def test_parity_map_lift_is_not_decomposable():
    for nonempty in (False, True):
        w = search_preservation_counterexample([parity_map(4)], nonempty=nonempty)
        assert w is not None and w.replay()
        assert w.input["x"] == FS([FS({0}), FS({0, 1, 2})])
        assert w.input["u"] == FS([FS([FS({0})]), FS([FS(), FS({1})])])
        assert w.rhs is None


def test_identity_lifts_decomposably():
    A = powerset_lattice(range(2))
    assert search_preservation_counterexample([LatticeMap(A, A, lambda x: x)]) is None


# convex algebras


def test_triangle_points():
    pts = triangle_points()
    assert pts["G"] == (H, 0, H)
    assert pts["F"] == (0, Fraction(2, 3), Fraction(1, 3))
    assert pts["D"] == tuple(H * (a + b) for a, b in zip(pts["B"], pts["F"]))


def _case_as_float_lp(case):
    # equality form with slacks so that the oracle sees the same system
    rows, rhs, n = [], [], case.nvars
    slack = [c for c in case.constraints if c.sense != EQ]
    width = n + len(slack)
    k = n
    for c in case.constraints:
        row = [float(a) for a in c.coeffs] + [0.0] * len(slack)
        if c.sense == LE:
            row[k] = 1.0
            k += 1
        elif c.sense == GE:
            row[k] = -1.0
            k += 1
        rows.append(row)
        rhs.append(float(c.rhs))
    return rows, rhs, width


def test_collapsed_segment_has_no_disintegration():
    res, w = collapse_segment_instance()
    assert not res.feasible and res.certified_infeasible
    assert len(res.cases) == 2 and w.replay()
    for case in res.cases:
        assert not lp_feasible_float(*_case_as_float_lp(case))


def test_base_map_of_the_instance_is_decomposable():
    assert check_affine_decomposable(collapse_map(), 3, 2).status is Status.HOLDS_SAMPLED


def test_conv_search_finds_a_grid_witness():
    w = search_conv_counterexample(collapse_map(), 3, 2)
    assert w is not None and w.replay()
    assert w.input["segment"] == ((0, H, H), (1, 0, 0))


# monoids


@pytest.mark.parametrize("lmax", [2, 3])
def test_subset_no_go_for_monoids(lmax):
    found = reproduce_mon_cmon(lmax)
    for name in ("Mon", "CMon"):
        ng = found[name]
        assert ng.confirmed and all(ng.premises.values()) and not ng.solutions
        assert ng.witness.replay()


def test_subset_no_go_needs_words_of_length_two():
    with pytest.raises(ValidationError):
        reproduce_mon_cmon(1)


@pytest.mark.parametrize("commutative", [False, True])
def test_multiset_and_distribution_no_go(commutative):
    m = multiset_no_go(commutative, 2)
    assert m.confirmed and m.witness.replay()
    d = distribution_no_go(commutative)
    assert d.confirmed and d.witness.replay() and not d.solutions


# the summary table


def test_expected_pattern_shape():
    assert len(COLUMNS) == 17 and ROWS == ("P", "P*")
    assert set(EXPECTED) == {(cat, col, row) for cat, col in COLUMNS for row in ROWS}
    assert set(OUT_OF_SCOPE.values()) == {"topological", "extension point"}
    assert all(EXPECTED[("JSL", "P", r)] == EXPECTED[("Conv", "P", r)] == "no" for r in ROWS)


def test_quick_table_matches_and_is_deterministic():
    a, b = table_report("quick"), table_report("quick")
    assert a.matches_expected and not a.mismatches()
    assert dumps(a) == dumps(b)
    text = a.render_text()
    assert text.splitlines()[1].startswith("P |") and "(x)" in text
