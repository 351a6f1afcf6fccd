"""Result carriers: decision verdicts and randomized-suite reports."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of one decision procedure.

    A failing verdict always carries the lowest-indexed failing element and
    a human-readable piece of time evidence.
    """

    holds: bool
    checked_definition: str
    witness_element: object = None
    witness_detail: str | None = None

    def __post_init__(self):
        if not self.holds and self.witness_element is None:
            raise ValueError("a failing verdict must carry a witness element")

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "checked_definition": self.checked_definition,
            "witness_element": self.witness_element,
            "witness_detail": self.witness_detail,
        }


@dataclass(frozen=True)
class SuiteReport:
    """Tally of one randomized theorem suite."""

    theorem_id: str
    trials: int
    violations: int
    seed: int
    first_failure: dict | None = None

    def __post_init__(self):
        if (self.violations > 0) != (self.first_failure is not None):
            raise ValueError("first_failure must be present iff violations > 0")

    def to_json(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "trials": self.trials,
            "violations": self.violations,
            "seed": self.seed,
            "first_failure": self.first_failure,
        }
