import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import dists, finfuns
from weaklaw.finrel import FinFun, FinSet, ValidationError
from weaklaw.monads import (
    D,
    L,
    M,
    MONADS,
    OPT,
    P,
    PSTAR,
    Dist,
    Multiset,
    check_monad_laws,
    check_nearly_cartesian_instance,
    draw_tower,
    enumerate_T,
    monad,
)
from weaklaw.verdict import Budget, Status

# closed forms at maxden = maxlen = 2
CARRIER_SIZE = {
    "P": lambda n: 2**n,
    "Pf": lambda n: 2**n,
    "P*": lambda n: 2**n - 1,
    "D": lambda n: n + comb(n, 2),
    "M": lambda n: comb(n + 2, 2),
    "L": lambda n: 1 + n + n * n,
    "Opt": lambda n: n + 1,
}


@pytest.mark.parametrize("name", sorted(MONADS))
def test_carrier_sizes_match_closed_forms(name):
    T = MONADS[name]
    for n in range(5):
        assert len(enumerate_T(T, range(n), Budget())) == CARRIER_SIZE[name](n)


@pytest.mark.parametrize("name", sorted(MONADS))
def test_monad_laws_hold(name):
    verdicts = check_monad_laws(MONADS[name], range(2), Budget(samples=80))
    assert all(v.holds for v in verdicts.values()), verdicts


def test_finite_monads_check_units_exhaustively():
    for T in (P, PSTAR, OPT):
        v = check_monad_laws(T, range(2), Budget(samples=50))
        assert v["left_unit"].status is Status.HOLDS_EXHAUSTIVE


def test_unknown_monad_name():
    with pytest.raises(ValidationError):
        monad("Q")


def test_dist_normalisation_and_validation():
    d = Dist({0: Fraction(1, 3), 1: Fraction(2, 3)})
    assert d[1] == Fraction(2, 3) and d[5] == 0
    assert Dist({0: Fraction(1, 2), 1: 0, 2: Fraction(1, 2)}).support == frozenset({0, 2})
    with pytest.raises(ValidationError):
        Dist({0: Fraction(1, 2)})
    with pytest.raises(ValidationError):
        Dist({0: Fraction(3, 2), 1: Fraction(-1, 2)})


def test_multiset_counts():
    m = Multiset(["a", "b", "a"])
    assert m["a"] == 2 and m.size == 3 and m == Multiset({"b": 1, "a": 2})


@given(dists())
def test_distribution_units(d):
    assert D.mult(D.unit(d)) == d
    assert D.mult(D.fmap(D.unit, d)) == d


@given(dists(), st.integers(0, 2))
def test_distribution_fmap_pushes_weight_forward(d, k):
    img = D.fmap(lambda x: min(x, k), d)
    assert sum(w for _, w in img.items()) == 1
    assert img[k] == sum(w for x, w in d.items() if x >= k)


@given(st.integers(0, 10_000))
def test_powerset_associativity_on_random_towers(seed):
    rng = random.Random(seed)
    for T in (P, PSTAR, M, L):
        t = draw_tower([T, T, T], list(range(3)), rng, Budget(maxlen=2))
        assert T.mult(T.mult(t)) == T.mult(T.fmap(T.mult, t))


@given(finfuns(3))
def test_powerset_multiplication_squares_are_near_pullbacks(f):
    v = check_nearly_cartesian_instance(P, f)
    assert v.holds


def test_multiplication_squares_of_a_collapse_hold_within_budget():
    f = FinFun(FinSet([0, 1]), FinSet([0]), {0: 0, 1: 0})
    for T in (L, M, D):
        assert check_nearly_cartesian_instance(T, f, Budget(maxlen=2)).status is Status.HOLDS_SAMPLED
    assert check_nearly_cartesian_instance(P, f).status is Status.HOLDS_EXHAUSTIVE
