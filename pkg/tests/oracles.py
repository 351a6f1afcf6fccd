"""Independent sampling oracles used to cross-check the decision procedures.

Every oracle here works by pointwise membership evaluation at a finite
probe set, never by the interval algebra it is checking. The probe sets
hit every atomic region cut out by the instances' endpoints, which is
sufficient because all generated endpoints sit on a coarse lattice.
"""

from __future__ import annotations

import math

from svfkit.sets import FiniteSet
from svfkit.sequences import SetSequence
from svfkit.svf import SetValuedFunction, svf_at

EPS = 2.0 ** -20


def finite_endpoints(*isets) -> list[float]:
    values = set()
    for iset in isets:
        for lo, hi in iset.intervals:
            if math.isfinite(lo.value):
                values.add(lo.value)
            if math.isfinite(hi.value):
                values.add(hi.value)
    return sorted(values)


def probe_points(*isets, include_endpoints: bool = True) -> list[float]:
    """Endpoints nudged both ways, gap midpoints, and outer sentinels.

    include_endpoints=False drops the raw endpoint values; comparisons
    against re-evaluated inequalities need that, because rounding at the
    exact threshold can fall on either side of a strict bound.
    """
    endpoints = finite_endpoints(*isets)
    if not endpoints:
        return [0.0]
    probes = set()
    for e in endpoints:
        probes.update((e - EPS, e + EPS))
        if include_endpoints:
            probes.add(e)
    for a, b in zip(endpoints, endpoints[1:]):
        probes.add(a + (b - a) / 2.0)
    probes.add(endpoints[0] - 1.0)
    probes.add(endpoints[-1] + 1.0)
    return sorted(probes)


def element_in_delta(f: SetValuedFunction, target: FiniteSet, i: int, t: float) -> bool:
    return f.trajectories[i].contains(t) != target.contains_index(i)


def infinity_convergence_oracle(f: SetValuedFunction, target: FiniteSet) -> bool:
    """Literal evaluation of the definition's quantifiers over the probe set.

    For every probe time and every element then disagreeing with the
    target, some later probe must begin an all-clear tail. The largest
    probe lies beyond every endpoint, so tails are decided exactly.
    """
    probes = probe_points(*f.trajectories)
    last = probes[-1]
    for ti in probes:
        if not f.domain.contains(ti):
            continue
        for i in range(len(f.universe)):
            if not element_in_delta(f, target, i, ti):
                continue
            if element_in_delta(f, target, i, last):
                return False  # still disagreeing past every endpoint
            settled = False
            for tj in probes:
                if all(not element_in_delta(f, target, i, t)
                       for t in probes if t >= tj and f.domain.contains(t)):
                    settled = True
                    break
            if not settled:
                return False
    # elements never seen in the difference are vacuously fine
    return True


def _side_probe(f: SetValuedFunction, t0: float, side: str) -> float:
    endpoints = finite_endpoints(*f.trajectories, f.domain)
    if side == "right":
        gaps = [e - t0 for e in endpoints if e > t0]
        return t0 + (min(gaps) if gaps else 2.0) / 2.0
    gaps = [t0 - e for e in endpoints if e < t0]
    return t0 - (min(gaps) if gaps else 2.0) / 2.0


def point_convergence_oracle(f: SetValuedFunction, t0: float, target: FiniteSet,
                             side: str) -> bool:
    """One membership probe inside the first atomic region on each side
    decides punctured accumulation exactly."""
    sides = ("left", "right") if side == "both" else (side,)
    for s in sides:
        p = _side_probe(f, t0, s)
        for i in range(len(f.universe)):
            if element_in_delta(f, target, i, p):
                return False
    return True


def continuity_oracle(f: SetValuedFunction, t0: float, side: str) -> bool:
    return point_convergence_oracle(f, t0, svf_at(f, t0), side)


# ---------------------------------------------------------------------------
# sequences

def brute_limsup_liminf(s: SetSequence) -> tuple[FiniteSet, FiniteSet]:
    """Explicit nested union/intersection over indices up to the
    stabilization bound."""
    outer = len(s.prefix) + len(s.cycle) + 1
    inner_stop = s.stabilization_bound()
    limsup = FiniteSet.full(s.universe)
    liminf = FiniteSet.empty(s.universe)
    for n in range(1, outer + 1):
        tail_union = FiniteSet.empty(s.universe)
        tail_intersection = FiniteSet.full(s.universe)
        for k in range(n, inner_stop + 1):
            tail_union = tail_union.union(s.at(k))
            tail_intersection = tail_intersection.intersect(s.at(k))
        limsup = limsup.intersect(tail_union)
        liminf = liminf.union(tail_intersection)
    return limsup, liminf


def seq_convergence_oracle(s: SetSequence, candidate: FiniteSet) -> bool:
    """Direct quantifier evaluation of the statement-style definition up to
    the stabilization bound."""
    stop = s.stabilization_bound()
    settle_by = len(s.prefix) + len(s.cycle) + 1
    for ni in range(1, stop + 1):
        diff = s.at(ni).sym_diff(candidate)
        for i in range(len(s.universe)):
            if not diff.contains_index(i):
                continue
            if not any(all(not s.at(n).sym_diff(candidate).contains_index(i)
                           for n in range(nj, stop + 1))
                       for nj in range(1, settle_by + 1)):
                return False
    return True
