"""Decision procedures for set-valued functions of a real variable.

A SetValuedFunction stores, per universe element, the exact set of times at
which the element belongs to the function value. Every convergence and
continuity question then reduces to boundedness or accumulation questions
about per-element "delta trajectories": the times at which an element sits
in the symmetric difference between the function value and a target set.
All answers are exact; there are no tolerances anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainBoundedAbove, IsolatedPoint, OutOfDomain, UniverseMismatch
from .intervals import (EMPTY, Endpoint, GermStatus, Interval, IntervalSet,
                        POS_INF, NEG_INF, accumulates_at, combine, complement,
                        germ_at_infinity, germ_at_point, is_subset)
from .sets import FiniteSet, Universe
from .verdicts import Verdict


@dataclass(frozen=True)
class SetValuedFunction:
    """A time domain plus one exact time trajectory per universe element."""

    universe: Universe
    domain: IntervalSet
    trajectories: tuple[IntervalSet, ...]

    def __post_init__(self):
        if len(self.trajectories) != len(self.universe):
            raise ValueError("one trajectory per universe element is required")
        for el, traj in zip(self.universe.elements, self.trajectories):
            if not is_subset(traj, self.domain):
                raise OutOfDomain(f"trajectory of {el!r} leaves the domain")

    def trajectory_of(self, element) -> IntervalSet:
        return self.trajectories[self.universe.index_of(element)]


def svf_at(f: SetValuedFunction, t: float) -> FiniteSet:
    """The time slice {x | t in trajectory(x)}."""
    if not f.domain.contains(t):
        raise OutOfDomain(f"t = {t!r} is outside the domain")
    bits = 0
    for i, traj in enumerate(f.trajectories):
        if traj.contains(t):
            bits |= 1 << i
    return FiniteSet(f.universe, bits)


def delta_trajectory(f: SetValuedFunction, target: FiniteSet, element) -> IntervalSet:
    """The exact set of times at which the element disagrees with the target."""
    if target.universe != f.universe:
        raise UniverseMismatch("target lives over a different universe")
    i = f.universe.index_of(element)
    return _delta(f, target, i)


def _delta(f: SetValuedFunction, target: FiniteSet, i: int) -> IntervalSet:
    traj = f.trajectories[i]
    if target.contains_index(i):
        return complement(traj, f.domain)
    return traj


def _require_unbounded(domain: IntervalSet) -> None:
    if domain.bounded_above():
        raise DomainBoundedAbove("domain has a finite supremum; "
                                 "behaviour at infinity is undefined")


def converges_at_infinity(f: SetValuedFunction, target: FiniteSet) -> Verdict:
    """Does every element eventually leave the symmetric difference for good?"""
    if target.universe != f.universe:
        raise UniverseMismatch("target lives over a different universe")
    _require_unbounded(f.domain)
    for i, el in enumerate(f.universe.elements):
        delta = _delta(f, target, i)
        if not delta.bounded_above():
            tail = delta.intervals[-1]
            return Verdict(False, "convergence-at-infinity",
                           witness_element=el,
                           witness_detail=f"disagreement times {delta} contain "
                                          f"the terminal ray {IntervalSet((tail,))}")
    return Verdict(True, "convergence-at-infinity")


def limsup_liminf_at_infinity(f: SetValuedFunction) -> tuple[FiniteSet, FiniteSet]:
    """limsup: elements in the value at unboundedly large times;
    liminf: elements eventually always in the value."""
    _require_unbounded(f.domain)
    sup_bits = 0
    inf_bits = 0
    for i, traj in enumerate(f.trajectories):
        if not traj.bounded_above():
            sup_bits |= 1 << i
        if germ_at_infinity(traj) is GermStatus.IN:
            inf_bits |= 1 << i
    u = f.universe
    return FiniteSet(u, sup_bits), FiniteSet(u, inf_bits)


def limit_at_infinity(f: SetValuedFunction) -> FiniteSet | None:
    """The unique limit set, present iff limsup equals liminf."""
    limsup, liminf = limsup_liminf_at_infinity(f)
    if limsup == liminf:
        return limsup
    return None


def _check_side(side: str) -> None:
    if side not in ("both", "left", "right"):
        raise ValueError(f"unknown side {side!r}")


def converges_at(f: SetValuedFunction, t0: float, target: FiniteSet,
                 side: str = "both") -> Verdict:
    """Punctured one- or two-sided convergence to the target at t0."""
    if target.universe != f.universe:
        raise UniverseMismatch("target lives over a different universe")
    _check_side(side)
    if not accumulates_at(f.domain, t0, side, punctured=True):
        raise IsolatedPoint(f"domain does not accumulate at {t0!r} from side {side}")
    tag = f"convergence-at-point-{side}"
    for i, el in enumerate(f.universe.elements):
        delta = _delta(f, target, i)
        if accumulates_at(delta, t0, side, punctured=True):
            return Verdict(False, tag, witness_element=el,
                           witness_detail=f"disagreement times {delta} accumulate "
                                          f"at t0 = {t0} from side {side}")
    return Verdict(True, tag)


def limit_at(f: SetValuedFunction, t0: float, side: str = "both") -> FiniteSet | None:
    """One-sided limits from per-element germs; the two-sided limit exists
    iff the one-sided limits exist and coincide."""
    _check_side(side)
    if side == "both":
        left = limit_at(f, t0, "left")
        right = limit_at(f, t0, "right")
        if left is not None and left == right:
            return left
        return None
    if not accumulates_at(f.domain, t0, side, punctured=True):
        raise IsolatedPoint(f"domain does not accumulate at {t0!r} from side {side}")
    bits = 0
    for i, traj in enumerate(f.trajectories):
        if germ_at_point(traj, t0, side) is GermStatus.IN:
            bits |= 1 << i
    return FiniteSet(f.universe, bits)


def continuous_at(f: SetValuedFunction, t0: float, side: str = "both") -> Verdict:
    """Unpunctured continuity against the value at t0 itself."""
    _check_side(side)
    if not f.domain.contains(t0):
        raise OutOfDomain(f"t0 = {t0!r} is outside the domain")
    target = svf_at(f, t0)
    tag = f"continuity-{side}"
    for i, el in enumerate(f.universe.elements):
        delta = _delta(f, target, i)
        # t0 itself never lies in the delta trajectory (the value never
        # disagrees with itself), so only the approach matters.
        if accumulates_at(delta, t0, side, punctured=False):
            return Verdict(False, tag, witness_element=el,
                           witness_detail=f"disagreement times {delta} accumulate "
                                          f"at t0 = {t0} from side {side}")
    return Verdict(True, tag)


def supremum(f: SetValuedFunction) -> FiniteSet:
    """Union of all values: elements whose trajectory is non-empty."""
    bits = 0
    for i, traj in enumerate(f.trajectories):
        if not traj.is_empty():
            bits |= 1 << i
    return FiniteSet(f.universe, bits)


def infimum(f: SetValuedFunction) -> FiniteSet:
    """Intersection of all values: elements present at every domain time."""
    bits = 0
    for i, traj in enumerate(f.trajectories):
        if traj == f.domain:
            bits |= 1 << i
    return FiniteSet(f.universe, bits)


class Monotonicity(Enum):
    EXPANDING = "EXPANDING"
    SHRINKING = "SHRINKING"
    CONSTANT = "CONSTANT"
    NEITHER = "NEITHER"


def _is_terminal_ray(traj: IntervalSet, domain: IntervalSet) -> bool:
    if traj.is_empty():
        return True
    if len(traj.intervals) != 1:
        return False
    lo = traj.intervals[0].lo
    ray = IntervalSet((Interval(lo, Endpoint(POS_INF, False)),))
    return traj == combine(domain, ray, "intersect")


def _is_initial_segment(traj: IntervalSet, domain: IntervalSet) -> bool:
    if traj.is_empty():
        return True
    if len(traj.intervals) != 1:
        return False
    hi = traj.intervals[0].hi
    seg = IntervalSet((Interval(Endpoint(NEG_INF, False), hi),))
    return traj == combine(domain, seg, "intersect")


def monotonicity(f: SetValuedFunction) -> Monotonicity:
    """EXPANDING iff t1 < t2 implies value(t1) inside value(t2); dually SHRINKING.

    Per element this says the trajectory is a terminal sub-ray (membership,
    once gained, is never lost) or an initial sub-segment of the domain.
    Inclusion is non-strict, so a constant function is both.
    """
    expanding = all(_is_terminal_ray(traj, f.domain) for traj in f.trajectories)
    shrinking = all(_is_initial_segment(traj, f.domain) for traj in f.trajectories)
    if expanding and shrinking:
        return Monotonicity.CONSTANT
    if expanding:
        return Monotonicity.EXPANDING
    if shrinking:
        return Monotonicity.SHRINKING
    return Monotonicity.NEITHER


# ---------------------------------------------------------------------------
# pointwise combinations of whole functions

def _check_compatible(f: SetValuedFunction, g: SetValuedFunction) -> None:
    if f.universe != g.universe:
        raise UniverseMismatch("functions live over different universes")
    if f.domain != g.domain:
        raise ValueError("functions must share a time domain")


def union_svf(f: SetValuedFunction, g: SetValuedFunction) -> SetValuedFunction:
    _check_compatible(f, g)
    return SetValuedFunction(f.universe, f.domain,
                             tuple(a.union(b) for a, b in
                                   zip(f.trajectories, g.trajectories)))


def intersect_svf(f: SetValuedFunction, g: SetValuedFunction) -> SetValuedFunction:
    _check_compatible(f, g)
    return SetValuedFunction(f.universe, f.domain,
                             tuple(a.intersect(b) for a, b in
                                   zip(f.trajectories, g.trajectories)))


def complement_svf(f: SetValuedFunction) -> SetValuedFunction:
    return SetValuedFunction(f.universe, f.domain,
                             tuple(complement(traj, f.domain)
                                   for traj in f.trajectories))


def constant_svf(universe: Universe, members: FiniteSet | None,
                 domain: IntervalSet) -> SetValuedFunction:
    mask = members if members is not None else FiniteSet.empty(universe)
    return SetValuedFunction(universe, domain,
                             tuple(domain if mask.contains_index(i) else EMPTY
                                   for i in range(len(universe))))


# ---------------------------------------------------------------------------
# serialization

def svf_to_json(f: SetValuedFunction) -> dict:
    from .intervals import to_json as iset_to_json
    return {
        "universe": list(f.universe.elements),
        "domain": iset_to_json(f.domain),
        "trajectories": [{"element": el, "intervals": iset_to_json(traj)}
                         for el, traj in zip(f.universe.elements, f.trajectories)],
    }
