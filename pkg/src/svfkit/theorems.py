"""Randomized suites that re-check every listed theorem against the deciders.

Each trial manufactures instances satisfying a theorem's hypotheses by
construction (never by rejection sampling), then checks the conclusion with
the decision procedures, falling back to independent membership sampling
where a second route exists. Trials are independent and deterministic in
(seed, trial index).
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor

from .errors import UnknownTheorem
from .intervals import complement, full_line, normalize
from .randgen import (bounded_piece, monotone_svf, random_away_iset,
                      random_bounded_iset, random_mask, standard_universe,
                      svf_from_rng, traj_constant_near,
                      traj_constant_near_punctured)
from .sets import FiniteSet
from .svf import (Monotonicity, SetValuedFunction, complement_svf, continuous_at,
                  converges_at, converges_at_infinity, infimum, intersect_svf,
                  limit_at, limit_at_infinity, limsup_liminf_at_infinity,
                  monotonicity, supremum, svf_at, svf_to_json, union_svf)
from .verdicts import SuiteReport

_GENERAL_PROFILES = ("eventually_constant", "monotone", "bounded_noise")
_T0 = 0.0


def _general_svf(rng: random.Random, n: int, trial: int) -> SetValuedFunction:
    return svf_from_rng(rng, n, _GENERAL_PROFILES[trial % 3])


def _beyond(*fs: SetValuedFunction) -> float:
    """A probe time past every finite trajectory endpoint."""
    m = 0.0
    for f in fs:
        for traj in f.trajectories:
            for lo, hi in traj.intervals:
                if math.isfinite(lo.value):
                    m = max(m, lo.value)
                if math.isfinite(hi.value):
                    m = max(m, hi.value)
    return m + 1.0


def _fail(detail: str, f: SetValuedFunction | None = None, **extra) -> dict:
    failure = {"detail": detail, **extra}
    if f is not None:
        failure["instance"] = svf_to_json(f)
    return failure


def _limit(f: SetValuedFunction) -> FiniteSet:
    lim = limit_at_infinity(f)
    assert lim is not None  # finite trajectories always stabilize
    return lim


# --- convergence at infinity -------------------------------------------------

def _check_complement_duality(rng, n, trial):
    f = _general_svf(rng, n, trial)
    target = random_mask(rng, f.universe)
    direct = converges_at_infinity(f, target)
    dual = converges_at_infinity(complement_svf(f), target.complement())
    if direct.holds != dual.holds:
        return _fail(f"complemented verdict {dual.holds} != {direct.holds}", f,
                     target=list(target.members()))
    return None


def _check_limit_membership(rng, n, trial):
    f = _general_svf(rng, n, trial)
    lim = _limit(f)
    probe = _beyond(f)
    for i, el in enumerate(f.universe.elements):
        eventually_in = f.trajectories[i].contains(probe)
        if lim.contains_index(i) != eventually_in:
            return _fail(f"element {el} limit membership disagrees with "
                         f"sampling at t = {probe}", f)
    return None


def _check_uniqueness(rng, n, trial):
    f = _general_svf(rng, n, trial)
    limsup, liminf = limsup_liminf_at_infinity(f)
    lim = limit_at_infinity(f)
    if limsup != liminf or lim != limsup:
        return _fail("limit routes disagree (germ mask vs limsup/liminf)", f)
    if not converges_at_infinity(f, lim).holds:
        return _fail("function does not converge to its computed limit", f)
    other = random_mask(rng, f.universe)
    if other == lim:
        other = other.sym_diff(FiniteSet(f.universe, 1))
    if converges_at_infinity(f, other).holds:
        return _fail("a second, distinct limit was accepted", f,
                     other=list(other.members()))
    return None


def _check_union_intersection(rng, n, trial):
    f = _general_svf(rng, n, trial)
    g = _general_svf(rng, n, trial + 1)
    a, b = _limit(f), _limit(g)
    fu = union_svf(f, g)
    if not converges_at_infinity(fu, a.union(b)).holds or _limit(fu) != a.union(b):
        return _fail("union limit is not the union of limits", f)
    fi = intersect_svf(f, g)
    if not converges_at_infinity(fi, a.intersect(b)).holds or _limit(fi) != a.intersect(b):
        return _fail("intersection limit is not the intersection of limits", f)
    h = _general_svf(rng, n, trial + 2)
    if _limit(union_svf(fu, h)) != a.union(b).union(_limit(h)):
        return _fail("three-fold union limit is not the union of limits", f)
    if _limit(intersect_svf(fi, h)) != a.intersect(b).intersect(_limit(h)):
        return _fail("three-fold intersection limit is not the intersection", f)
    return None


def _check_expanding_sup(rng, n, trial):
    f = monotone_svf(rng, n, "expanding")
    if monotonicity(f) not in (Monotonicity.EXPANDING, Monotonicity.CONSTANT):
        return _fail("generator failed to produce an expanding function", f)
    top = supremum(f)
    if not converges_at_infinity(f, top).holds or _limit(f) != top:
        return _fail("expanding function does not converge to its supremum", f)
    return None


def _check_shrinking_inf(rng, n, trial):
    f = monotone_svf(rng, n, "shrinking")
    if monotonicity(f) not in (Monotonicity.SHRINKING, Monotonicity.CONSTANT):
        return _fail("generator failed to produce a shrinking function", f)
    bottom = infimum(f)
    if not converges_at_infinity(f, bottom).holds or _limit(f) != bottom:
        return _fail("shrinking function does not converge to its infimum", f)
    return None


def _check_squeeze(rng, n, trial):
    inner = _general_svf(rng, n, trial)
    extras = [random_bounded_iset(rng) for _ in range(n)]
    outer = SetValuedFunction(inner.universe, inner.domain,
                              tuple(t.union(e) for t, e in
                                    zip(inner.trajectories, extras)))
    slack = [e.intersect(random_bounded_iset(rng)) for e in extras]
    middle = SetValuedFunction(inner.universe, inner.domain,
                               tuple(t.union(s) for t, s in
                                     zip(inner.trajectories, slack)))
    lim = _limit(inner)
    if _limit(outer) != lim:
        return _fail("bounded extras changed the outer limit", inner)
    if not converges_at_infinity(middle, lim).holds:
        return _fail("sandwiched function does not converge to the shared limit",
                     middle)
    return None


def _check_upper_bound(rng, n, trial):
    f = _general_svf(rng, n, trial)
    lim = _limit(f)
    probe = _beyond(f)
    eligible = 0
    for i, traj in enumerate(f.trajectories):
        if traj.contains(probe):
            eligible |= 1 << i
    held = FiniteSet(f.universe, eligible & rng.getrandbits(n))
    if not held.is_subset(lim):
        return _fail("an eventually-contained set escaped the limit", f,
                     held=list(held.members()))
    return None


def _check_order(rng, n, trial):
    f = _general_svf(rng, n, trial)
    g = union_svf(f, _general_svf(rng, n, trial + 1))
    if not _limit(f).is_subset(_limit(g)):
        return _fail("pointwise containment did not order the limits", f)
    return None


def _check_eventual_eq(rng, n, trial):
    f = svf_from_rng(rng, n, "eventually_constant")
    g = svf_from_rng(rng, n, "eventually_constant")
    probe = _beyond(f, g)
    tail_f = svf_at(f, probe)
    if not converges_at_infinity(f, tail_f).holds:
        return _fail("eventually constant function missed its tail value", f)
    if _limit(f).union(_limit(g)) != tail_f.union(svf_at(g, probe)):
        return _fail("limit of union differs from the eventual union", f)
    if _limit(f).intersect(_limit(g)) != tail_f.intersect(svf_at(g, probe)):
        return _fail("limit of intersection differs from the eventual intersection", f)
    return None


def _check_nonlimit_witness(rng, n, trial):
    f = _general_svf(rng, n, trial)
    lim = _limit(f)
    if lim == FiniteSet.full(f.universe):
        trajs = list(f.trajectories)
        trajs[0] = normalize([bounded_piece(rng, -10.0, 10.0)])
        f = SetValuedFunction(f.universe, f.domain, tuple(trajs))
        lim = _limit(f)
    outside = next(i for i in range(n) if not lim.contains_index(i))
    straggler = FiniteSet(f.universe, rng.getrandbits(n) | 1 << outside)
    # some member must leave the value at arbitrarily late times
    if not any(straggler.contains_index(i)
               and not complement(f.trajectories[i], f.domain).bounded_above()
               for i in range(n)):
        return _fail("no member of the non-subset escapes at late times", f,
                     straggler=list(straggler.members()))
    return None


# --- convergence and continuity at a point ------------------------------------

def _point_svf(rng, n):
    return svf_from_rng(rng, n, "point_germ", t0=_T0)


def _single(universe, i):
    return FiniteSet(universe, 1 << i)


def _check_point_analogues(rng, n, trial):
    case = trial % 6
    if case == 0:
        f = _point_svf(rng, n)
        target = random_mask(rng, f.universe)
        for side in ("left", "right", "both"):
            direct = converges_at(f, _T0, target, side)
            dual = converges_at(complement_svf(f), _T0, target.complement(), side)
            if direct.holds != dual.holds:
                return _fail(f"point duality broke on side {side}", f,
                             target=list(target.members()))
    elif case == 1:
        f = _point_svf(rng, n)
        for side in ("left", "right"):
            lim = limit_at(f, _T0, side)
            if not converges_at(f, _T0, lim, side).holds:
                return _fail(f"{side} germ mask is not a {side}-limit", f)
            other = lim.sym_diff(_single(f.universe, rng.randrange(n)))
            if converges_at(f, _T0, other, side).holds:
                return _fail(f"a second {side}-limit was accepted", f)
    elif case == 2:
        f, g = _point_svf(rng, n), _point_svf(rng, n)
        for side in ("left", "right"):
            lf, lg = limit_at(f, _T0, side), limit_at(g, _T0, side)
            if limit_at(union_svf(f, g), _T0, side) != lf.union(lg):
                return _fail(f"{side}-limit of union is not the union", f)
            if limit_at(intersect_svf(f, g), _T0, side) != lf.intersect(lg):
                return _fail(f"{side}-limit of intersection is not the intersection", f)
    elif case == 3:
        inner = _point_svf(rng, n)
        extras = [random_away_iset(rng, _T0) for _ in range(n)]
        outer = SetValuedFunction(inner.universe, inner.domain,
                                  tuple(t.union(e) for t, e in
                                        zip(inner.trajectories, extras)))
        slack = [e.intersect(random_away_iset(rng, _T0)) for e in extras]
        middle = SetValuedFunction(inner.universe, inner.domain,
                                   tuple(t.union(s) for t, s in
                                         zip(inner.trajectories, slack)))
        for side in ("left", "right"):
            lim = limit_at(inner, _T0, side)
            if limit_at(outer, _T0, side) != lim:
                return _fail("far-away extras changed a one-sided limit", inner)
            if not converges_at(middle, _T0, lim, side).holds:
                return _fail(f"sandwiched function missed the {side}-limit", middle)
    elif case == 4:
        f = _point_svf(rng, n)
        g = union_svf(f, _point_svf(rng, n))
        for side in ("left", "right"):
            if not limit_at(f, _T0, side).is_subset(limit_at(g, _T0, side)):
                return _fail(f"containment did not order the {side}-limits", f)
    else:
        target = random_mask(rng, standard_universe(n))
        trajs = tuple(traj_constant_near_punctured(rng, _T0, target.contains_index(i))
                      for i in range(n))
        f = SetValuedFunction(target.universe, full_line(), trajs)
        if not converges_at(f, _T0, target, "both").holds:
            return _fail("locally constant function does not converge to its value", f)
        if limit_at(f, _T0, "both") != target:
            return _fail("locally constant function has the wrong limit", f)
    return None


def _check_continuity_analogues(rng, n, trial):
    case = trial % 4
    universe = standard_universe(n)
    if case == 0:
        f = _point_svf(rng, n)
        for side in ("left", "right", "both"):
            direct = continuous_at(f, _T0, side)
            dual = continuous_at(complement_svf(f), _T0, side)
            if direct.holds != dual.holds:
                return _fail(f"continuity duality broke on side {side}", f)
        return None
    mask_f = random_mask(rng, universe)
    f = _locally_constant_svf(rng, universe, mask_f)
    if case == 1:
        g = _locally_constant_svf(rng, universe, random_mask(rng, universe))
        for built in (union_svf(f, g), intersect_svf(f, g)):
            if not continuous_at(built, _T0, "both").holds:
                return _fail("combination of continuous functions is discontinuous",
                             built)
    elif case == 2:
        for side in ("both", "left", "right"):
            if not continuous_at(f, _T0, side).holds:
                return _fail(f"locally constant function is not {side}-continuous", f)
    else:
        if not continuous_at(f, _T0, "both").holds:
            return _fail("construction is not continuous", f)
        value = svf_at(f, _T0)
        for probe in (_T0 - 0.125, _T0 + 0.125):
            if svf_at(f, probe) != value:
                return _fail(f"value changed at nearby probe t = {probe}", f)
    return None


def _locally_constant_svf(rng, universe, mask):
    trajs = tuple(traj_constant_near(rng, _T0, mask.contains_index(i))
                  for i in range(len(universe)))
    return SetValuedFunction(universe, full_line(), trajs)


def _check_coincide(rng, n, trial):
    f = _point_svf(rng, n)
    left = limit_at(f, _T0, "left")
    right = limit_at(f, _T0, "right")
    both = limit_at(f, _T0, "both")
    if left == right:
        if both != left:
            return _fail("two-sided limit missing despite matching sides", f)
        if not converges_at(f, _T0, left, "both").holds:
            return _fail("matching one-sided limits do not converge two-sidedly", f)
    else:
        if both is not None:
            return _fail("two-sided limit present despite differing sides", f)
        if converges_at(f, _T0, left, "both").holds or \
                converges_at(f, _T0, right, "both").holds:
            return _fail("a one-sided candidate converged two-sidedly", f)
    cb = continuous_at(f, _T0, "both")
    cl = continuous_at(f, _T0, "left")
    cr = continuous_at(f, _T0, "right")
    if cb.holds != (cl.holds and cr.holds):
        return _fail("two-sided continuity disagrees with its one-sided halves", f)
    return None


REGISTRY = {
    "COMPLEMENT_DUALITY": _check_complement_duality,
    "LIMIT_MEMBERSHIP": _check_limit_membership,
    "UNIQUENESS": _check_uniqueness,
    "UNION_INTERSECTION": _check_union_intersection,
    "EXPANDING_SUP": _check_expanding_sup,
    "SHRINKING_INF": _check_shrinking_inf,
    "SQUEEZE": _check_squeeze,
    "UPPER_BOUND": _check_upper_bound,
    "ORDER": _check_order,
    "EVENTUAL_EQ": _check_eventual_eq,
    "NONLIMIT_WITNESS": _check_nonlimit_witness,
    "POINT_ANALOGUES": _check_point_analogues,
    "CONTINUITY_ANALOGUES": _check_continuity_analogues,
    "COINCIDE": _check_coincide,
}

ALL_THEOREMS = tuple(REGISTRY)


def run_theorem_suite(theorem_id: str, trials: int, seed: int,
                      universe_size: int = 6, parallel: bool = False) -> SuiteReport:
    """Run one registered suite; deterministic in (seed, trial index)."""
    try:
        check = REGISTRY[theorem_id]
    except KeyError:
        raise UnknownTheorem(f"no suite registered under {theorem_id!r}") from None
    if trials < 1:
        raise ValueError("trials must be at least 1")

    def one(trial: int):
        rng = random.Random(f"{theorem_id}:{seed}:{trial}")
        return check(rng, universe_size, trial)

    if parallel:
        with ThreadPoolExecutor() as pool:
            outcomes = list(pool.map(one, range(trials)))
    else:
        outcomes = [one(trial) for trial in range(trials)]
    violations = 0
    first_failure = None
    for trial, outcome in enumerate(outcomes):
        if outcome is not None:
            violations += 1
            if first_failure is None:
                first_failure = {"trial": trial, **outcome}
    return SuiteReport(theorem_id, trials, violations, seed, first_failure)
