"""Eventually periodic sequences of sets with exact limsup/liminf.

A finite prefix plus a repeating cycle makes the tail of the sequence
decidable: limsup is the union of the cycle sets, liminf their
intersection, and the statement-style convergence definition reduces to a
per-element check over the cycle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BadIndex, UniverseMismatch
from .sets import FiniteSet, Universe
from .verdicts import SuiteReport, Verdict


@dataclass(frozen=True)
class SetSequence:
    """A_n for n >= 1 is prefix[n-1] while it lasts, then the cycle repeats."""

    universe: Universe
    prefix: tuple[FiniteSet, ...]
    cycle: tuple[FiniteSet, ...]

    def __post_init__(self):
        if not self.cycle:
            raise ValueError("cycle must be non-empty")
        for fs in (*self.prefix, *self.cycle):
            if fs.universe != self.universe:
                raise UniverseMismatch("sequence members live over different universes")

    @classmethod
    def from_members(cls, universe: Universe, prefix, cycle) -> "SetSequence":
        return cls(universe,
                   tuple(FiniteSet.from_members(universe, g) for g in prefix),
                   tuple(FiniteSet.from_members(universe, g) for g in cycle))

    def at(self, n: int) -> FiniteSet:
        if n < 1:
            raise BadIndex("sequence indices start at 1")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.cycle[(n - len(self.prefix) - 1) % len(self.cycle)]

    def stabilization_bound(self) -> int:
        """Indices beyond this repeat behaviour already seen."""
        return len(self.prefix) + 2 * len(self.cycle)


def limsup_liminf(s: SetSequence) -> tuple[FiniteSet, FiniteSet]:
    """Elements appearing infinitely often vs eventually always."""
    sup = FiniteSet.empty(s.universe)
    inf = FiniteSet.full(s.universe)
    for fs in s.cycle:
        sup = sup.union(fs)
        inf = inf.intersect(fs)
    return sup, inf


def converges_to(s: SetSequence, candidate: FiniteSet) -> Verdict:
    """Statement-style convergence: every element eventually stays out of
    the symmetric difference with the candidate.

    Exactly decidable: a member of the candidate must sit in every cycle
    set, a non-member in none.
    """
    if candidate.universe != s.universe:
        raise UniverseMismatch("candidate lives over a different universe")
    in_all = FiniteSet.full(s.universe)
    in_none = FiniteSet.full(s.universe)
    for fs in s.cycle:
        in_all = in_all.intersect(fs)
        in_none = in_none.intersect(fs.complement())
    for i, el in enumerate(s.universe.elements):
        if candidate.contains_index(i):
            if not in_all.contains_index(i):
                return Verdict(False, "sequence-convergence", witness_element=el,
                               witness_detail="drops out of the repeating cycle "
                                              "infinitely often")
        elif not in_none.contains_index(i):
            return Verdict(False, "sequence-convergence", witness_element=el,
                           witness_detail="re-enters the repeating cycle "
                                          "infinitely often")
    return Verdict(True, "sequence-convergence")


def delta_sequence(s: SetSequence, candidate: FiniteSet) -> SetSequence:
    """The derived sequence {A_n sym_diff candidate}, same prefix/cycle shape."""
    if candidate.universe != s.universe:
        raise UniverseMismatch("candidate lives over a different universe")
    return SetSequence(s.universe,
                       tuple(fs.sym_diff(candidate) for fs in s.prefix),
                       tuple(fs.sym_diff(candidate) for fs in s.cycle))


# ---------------------------------------------------------------------------
# randomized equivalence suite

def random_sequence(rng: random.Random, universe: Universe,
                    max_prefix: int = 4, max_cycle: int = 3) -> SetSequence:
    n = len(universe)
    prefix = tuple(FiniteSet(universe, rng.getrandbits(n))
                   for _ in range(rng.randint(0, max_prefix)))
    cycle = tuple(FiniteSet(universe, rng.getrandbits(n))
                  for _ in range(rng.randint(1, max_cycle)))
    return SetSequence(universe, prefix, cycle)


def candidate_pool(rng: random.Random, s: SetSequence) -> list[FiniteSet]:
    """Candidates that exercise both verdict polarities: the cycle
    intersection and union, the extremes, and a random mask."""
    sup, inf = limsup_liminf(s)
    return [inf, sup, FiniteSet.empty(s.universe), FiniteSet.full(s.universe),
            FiniteSet(s.universe, rng.getrandbits(len(s.universe)))]


def _equivalent_on(s: SetSequence, a: FiniteSet) -> str | None:
    """Check the two equivalences for one sequence/candidate pair.

    (i) the statement-style definition holds iff limsup = candidate = liminf;
    (ii) it holds iff the derived symmetric-difference sequence has limsup
    and liminf both empty. Returns a description of the first disagreement.
    """
    by_def = converges_to(s, a).holds
    sup, inf = limsup_liminf(s)
    by_limits = sup == a == inf
    delta_sup, delta_inf = limsup_liminf(delta_sequence(s, a))
    by_delta = delta_sup.is_empty() and delta_inf.is_empty()
    if by_def != by_limits:
        return f"definition says {by_def}, limsup/liminf equality says {by_limits}"
    if by_def != by_delta:
        return f"definition says {by_def}, empty-delta-limits says {by_delta}"
    return None


def equivalence_suite(trials: int, seed: int, universe_size: int = 6) -> SuiteReport:
    """Randomized check that all three convergence characterizations agree."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if universe_size > 8:
        raise ValueError("universe_size is capped at 8 for this suite")
    universe = Universe(tuple(f"e{i}" for i in range(universe_size)))
    violations = 0
    first_failure = None
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        s = random_sequence(rng, universe)
        for a in candidate_pool(rng, s):
            problem = _equivalent_on(s, a)
            if problem is not None:
                violations += 1
                if first_failure is None:
                    first_failure = {
                        "trial": trial,
                        "sequence": sequence_to_json(s),
                        "candidate": list(a.members()),
                        "problem": problem,
                    }
    return SuiteReport("SEQUENCE_EQUIVALENCE", trials, violations, seed, first_failure)


def sequence_to_json(s: SetSequence) -> dict:
    return {
        "universe": list(s.universe.elements),
        "prefix": [list(fs.members()) for fs in s.prefix],
        "cycle": [list(fs.members()) for fs in s.cycle],
    }


def sequence_from_json(data: dict) -> SetSequence:
    universe = Universe(tuple(data["universe"]))
    return SetSequence.from_members(universe, data["prefix"], data["cycle"])
