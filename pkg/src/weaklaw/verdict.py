"""Three-valued check outcomes and the budgets that produce them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from typing import Any, Iterable


class Status(str, enum.Enum):
    HOLDS_EXHAUSTIVE = "holds_exhaustive"
    HOLDS_SAMPLED = "holds_sampled"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Budget:
    """Bounds for enumerating infinite carriers and for random sampling.

    maxden bounds denominators of distributions; maxlen bounds word length,
    multiset size and the size of randomly drawn subsets; samples caps the
    number of random inputs when a domain is too large to sweep (None means
    sweep everything that fits).
    """

    maxden: int = 2
    maxlen: int = 2
    samples: int | None = None
    seed: int = 0

    def __post_init__(self):
        if self.maxden < 1 or self.maxlen < 1:
            raise ValueError("enumeration budgets must be positive")

    def as_dict(self) -> dict:
        return {"maxden": self.maxden, "maxlen": self.maxlen, "samples": self.samples, "seed": self.seed}


@dataclass(frozen=True)
class Verdict:
    status: Status
    checked: int = 0
    witness: dict | None = None
    note: str = ""
    budget: Budget | None = None

    @property
    def holds(self) -> bool:
        return self.status in (Status.HOLDS_EXHAUSTIVE, Status.HOLDS_SAMPLED)

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    @property
    def exhaustive(self) -> bool:
        return self.status is Status.HOLDS_EXHAUSTIVE

    def to_json(self) -> dict:
        out: dict[str, Any] = {"status": self.status.value, "checked": self.checked}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        if self.budget is not None and self.status is not Status.HOLDS_EXHAUSTIVE:
            out["budget"] = self.budget.as_dict()
        return out


def holds(checked: int, exact: bool, budget: Budget | None = None, note: str = "") -> Verdict:
    status = Status.HOLDS_EXHAUSTIVE if exact else Status.HOLDS_SAMPLED
    return Verdict(status, checked, None, note, None if exact else budget)


def fails(checked: int, witness: dict, note: str = "") -> Verdict:
    return Verdict(Status.FAILS, checked, witness, note)


def inconclusive(checked: int, note: str, witness: dict | None = None) -> Verdict:
    return Verdict(Status.INCONCLUSIVE, checked, witness, note)


def combine(verdicts: Iterable[Verdict]) -> Verdict:
    """Conjunction: the first failure wins, then inconclusive, then sampled."""
    verdicts = list(verdicts)
    total = sum(v.checked for v in verdicts)
    for v in verdicts:
        if v.fails:
            return replace(v, checked=total)
    for v in verdicts:
        if v.status is Status.INCONCLUSIVE:
            return replace(v, checked=total)
    for v in verdicts:
        if v.status is Status.HOLDS_SAMPLED:
            return replace(v, checked=total)
    return Verdict(Status.HOLDS_EXHAUSTIVE, total)


@dataclass
class Sweep:
    """Accumulates a check over a stream of inputs, stopping at the first failure."""

    exact: bool
    budget: Budget | None = None
    checked: int = 0
    witness: dict | None = None
    notes: list = field(default_factory=list)

    def fail(self, witness: dict) -> None:
        self.witness = witness

    def verdict(self) -> Verdict:
        note = "; ".join(self.notes)
        if self.witness is not None:
            return fails(self.checked, self.witness, note)
        return holds(self.checked, self.exact, self.budget, note)
