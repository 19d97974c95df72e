"""Deterministic JSON encoding of check results."""

from __future__ import annotations

import dataclasses
import enum
import json
from fractions import Fraction
from typing import Any

from .convex import DistHull
from .finrel import FinFun, FinRel, FinSet, csorted
from .lp import PolytopeQ
from .monads import Dist, Multiset
from .verdict import Budget, Verdict


def jsonable(obj: Any) -> Any:
    """Plain JSON data for the objects that appear in reports.

    Sets become canonically sorted lists, fractions become "p/q" strings,
    tuples become lists; tagged dicts mark distributions, multisets and
    polytopes so that they cannot be confused with sets.
    """
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return str(obj) if obj.denominator != 1 else obj.numerator
    if isinstance(obj, float):
        return obj
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Verdict):
        return jsonable(obj.to_json())
    if isinstance(obj, Budget):
        return obj.as_dict()
    if isinstance(obj, Dist):
        return {"dist": [[jsonable(x), jsonable(w)] for x, w in obj.items()]}
    if isinstance(obj, Multiset):
        return {"multiset": [[jsonable(x), n] for x, n in obj.items()]}
    if isinstance(obj, DistHull):
        return {"hull": [jsonable(v) for v in csorted(obj.vertices)]}
    if isinstance(obj, PolytopeQ):
        return {"polytope": [jsonable(v) for v in obj.vertices]}
    if isinstance(obj, FinSet):
        return [jsonable(x) for x in obj.elems]
    if isinstance(obj, FinFun):
        return {"map": [[jsonable(x), jsonable(obj(x))] for x in obj.dom.elems]}
    if isinstance(obj, FinRel):
        return {"relation": [jsonable(p) for p in csorted(obj.pairs)]}
    if isinstance(obj, (set, frozenset)):
        return [jsonable(x) for x in csorted(obj)]
    if isinstance(obj, (tuple, list)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj) if f.repr}
    return repr(obj)


def _key(k: Any) -> str:
    if isinstance(k, str):
        return k
    return json.dumps(jsonable(k), sort_keys=True, separators=(",", ":"))


def dumps(obj: Any) -> str:
    """Byte-stable JSON text (sorted keys, fixed indentation, trailing newline)."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
