"""Finite, exact checks for weak distributive laws between monads on sets,
their weak composites, and the lifted powerset monads on algebras."""

from .finrel import FinFun, FinRel, FinSet, ValidationError
from .verdict import Budget, Status, Verdict
from .monads import MONADS, Dist, Multiset
from .laws import AXIOMS, axiom_report, check_axiom, check_monotone, check_naturality, law_by_name
from .lifted import LiftedPowersetJSL, weak_composite

__all__ = [
    "AXIOMS", "Budget", "Dist", "FinFun", "FinRel", "FinSet", "LiftedPowersetJSL", "MONADS",
    "Multiset", "Status", "ValidationError", "Verdict", "axiom_report", "check_axiom",
    "check_monotone", "check_naturality", "law_by_name", "weak_composite",
]
