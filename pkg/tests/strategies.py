from fractions import Fraction

from hypothesis import strategies as st

from weaklaw.finrel import FinFun, FinRel, FinSet
from weaklaw.monads import Dist


def finsets(max_size=4):
    return st.integers(0, max_size).map(lambda n: FinSet(range(n)))


@st.composite
def finfuns(draw, max_size=4, nonempty_cod=True):
    X = draw(finsets(max_size))
    m = draw(st.integers(1 if nonempty_cod or len(X) else 0, max_size))
    Y = FinSet(range(m))
    table = {x: draw(st.integers(0, m - 1)) for x in X}
    return FinFun(X, Y, table)


@st.composite
def relations(draw, X=None, Y=None, max_size=3):
    X = draw(finsets(max_size)) if X is None else X
    Y = draw(finsets(max_size)) if Y is None else Y
    cells = [(a, b) for a in X for b in Y]
    pairs = draw(st.lists(st.sampled_from(cells), unique=True)) if cells else []
    return FinRel(X, Y, pairs)


def subsets_of(xs):
    return st.frozensets(st.sampled_from(list(xs))) if xs else st.just(frozenset())


def pp_elements(n=3):
    """Elements of PPX for X = range(n)."""
    return st.frozensets(subsets_of(range(n)), max_size=5)


@st.composite
def dists(draw, n=3, maxden=4):
    support = draw(st.lists(st.integers(0, n - 1), min_size=1, max_size=n, unique=True))
    raw = [draw(st.integers(1, maxden)) for _ in support]
    total = sum(raw)
    return Dist({x: Fraction(r, total) for x, r in zip(support, raw)})
