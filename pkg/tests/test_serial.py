import json
from dataclasses import dataclass
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from strategies import dists
from weaklaw.convex import DistHull
from weaklaw.finrel import FinFun, FinRel, FinSet
from weaklaw.lp import PolytopeQ
from weaklaw.monads import Dist, Multiset
from weaklaw.serial import dumps, jsonable
from weaklaw.verdict import Budget, Status, Verdict

FS = frozenset


def test_fractions_and_sets():
    assert jsonable(Fraction(3, 4)) == "3/4" and jsonable(Fraction(4, 2)) == 2
    assert jsonable(FS([FS({1}), FS(), FS({0, 1})])) == [[], [1], [0, 1]]


def test_tagged_structures():
    assert jsonable(Dist({0: Fraction(1, 2), 1: Fraction(1, 2)})) == {"dist": [[0, "1/2"], [1, "1/2"]]}
    assert jsonable(Multiset("aab")) == {"multiset": [["a", 2], ["b", 1]]}
    assert jsonable(DistHull([Dist.delta(1), Dist.delta(0)])) == {"hull": [{"dist": [[0, 1]]}, {"dist": [[1, 1]]}]}
    assert jsonable(PolytopeQ(1, [(0,), (1,)])) == {"polytope": [[0], [1]]}
    X = FinSet([0, 1])
    assert jsonable(FinFun(X, X, {0: 1, 1: 0})) == {"map": [[0, 1], [1, 0]]}
    assert jsonable(FinRel(X, X, [(1, 1), (0, 1)])) == {"relation": [[0, 1], [1, 1]]}


def test_verdicts_and_dataclasses():
    v = Verdict(Status.HOLDS_SAMPLED, 5, budget=Budget(samples=5))
    assert jsonable(v) == {"status": "holds_sampled", "checked": 5, "budget": Budget(samples=5).as_dict()}

    @dataclass
    class Box:
        a: int
        b: tuple

    assert jsonable(Box(1, (Fraction(1, 2),))) == {"a": 1, "b": ["1/2"]}


def test_non_string_keys_are_encoded():
    out = jsonable({FS({0}): 1, (0, 1): 2})
    assert out == {"[0]": 1, "[0,1]": 2}


@given(st.frozensets(st.frozensets(st.integers(0, 3))), dists())
def test_dumps_is_stable_and_parses(sets, d):
    payload = {"sets": sets, "dist": d, "key": {d: sets}}
    text = dumps(payload)
    assert text == dumps(dict(reversed(list(payload.items()))))
    assert text.endswith("\n") and json.loads(text)
