"""Closed-form trajectory construction for the disk and point families.

All disk families depend only on the distance rho from the origin, so a
universe of sampled radii captures them exactly. Thresholds are evaluated
in a fixed literal order (1/(1-rho), 1/(rho-1)) so equal inputs always
yield bit-identical endpoints; rho values that would divide by zero are
handled by case analysis instead.
"""

from __future__ import annotations

import math
from enum import Enum

from .errors import UnsupportedKind
from .intervals import (EMPTY, IntervalSet, full_line, interval, point,
                        ray_above)
from .sets import FiniteSet, Universe
from .svf import SetValuedFunction


class RadialFamilyKind(Enum):
    OPEN_INNER = "OPEN_INNER"        # rho <  1 - 1/t   on (1, inf)
    CLOSED_INNER = "CLOSED_INNER"    # rho <= 1 - 1/t   on (1, inf)
    CLOSED_OUTER = "CLOSED_OUTER"    # rho <= 1 + 1/t   on (1, inf)
    OPEN_OUTER = "OPEN_OUTER"        # rho <  1 + 1/t   on (1, inf)
    OPEN_SCALE = "OPEN_SCALE"        # rho <  t         on (0, inf)
    CLOSED_SCALE = "CLOSED_SCALE"    # rho <= t         on (0, inf)
    GROW_OPEN = "GROW_OPEN"          # rho <  t         on (0, inf), unbounded growth
    POINT = "POINT"                  # the singleton {t} on the whole line
    CONSTANT = "CONSTANT"            # a fixed subset on the whole line


_RADIAL_KINDS = {
    RadialFamilyKind.OPEN_INNER, RadialFamilyKind.CLOSED_INNER,
    RadialFamilyKind.CLOSED_OUTER, RadialFamilyKind.OPEN_OUTER,
    RadialFamilyKind.OPEN_SCALE, RadialFamilyKind.CLOSED_SCALE,
    RadialFamilyKind.GROW_OPEN,
}


def family_domain(kind: RadialFamilyKind) -> IntervalSet:
    if kind in (RadialFamilyKind.OPEN_INNER, RadialFamilyKind.CLOSED_INNER,
                RadialFamilyKind.CLOSED_OUTER, RadialFamilyKind.OPEN_OUTER):
        return ray_above(1.0)
    if kind in (RadialFamilyKind.OPEN_SCALE, RadialFamilyKind.CLOSED_SCALE,
                RadialFamilyKind.GROW_OPEN):
        return ray_above(0.0)
    return full_line()


def radial_trajectory(kind: RadialFamilyKind, rho: float) -> IntervalSet:
    """Exact solution set in t of the kind's membership inequality."""
    if rho < 0:
        raise ValueError("rho must be non-negative")
    if kind is RadialFamilyKind.OPEN_INNER:
        if rho >= 1.0:
            return EMPTY
        return ray_above(1.0 / (1.0 - rho))
    if kind is RadialFamilyKind.CLOSED_INNER:
        if rho >= 1.0:
            return EMPTY
        tau = 1.0 / (1.0 - rho)
        return ray_above(tau, closed=True) if tau > 1.0 else ray_above(1.0)
    if kind is RadialFamilyKind.CLOSED_OUTER:
        if rho <= 1.0:
            return ray_above(1.0)
        tau = 1.0 / (rho - 1.0)
        return interval(1.0, tau, False, True) if tau > 1.0 else EMPTY
    if kind is RadialFamilyKind.OPEN_OUTER:
        if rho <= 1.0:
            return ray_above(1.0)
        tau = 1.0 / (rho - 1.0)
        return interval(1.0, tau, False, False) if tau > 1.0 else EMPTY
    if kind in (RadialFamilyKind.OPEN_SCALE, RadialFamilyKind.GROW_OPEN):
        return ray_above(rho)
    if kind is RadialFamilyKind.CLOSED_SCALE:
        return ray_above(rho, closed=True) if rho > 0.0 else ray_above(0.0)
    raise UnsupportedKind(f"{kind.value} has no radial trajectory")


def membership_predicate(kind: RadialFamilyKind, rho: float, t: float) -> bool:
    """The raw inequality the trajectory algebra must reproduce."""
    if kind is RadialFamilyKind.OPEN_INNER:
        return t > 1.0 and rho < 1.0 - 1.0 / t
    if kind is RadialFamilyKind.CLOSED_INNER:
        return t > 1.0 and rho <= 1.0 - 1.0 / t
    if kind is RadialFamilyKind.CLOSED_OUTER:
        return t > 1.0 and rho <= 1.0 + 1.0 / t
    if kind is RadialFamilyKind.OPEN_OUTER:
        return t > 1.0 and rho < 1.0 + 1.0 / t
    if kind in (RadialFamilyKind.OPEN_SCALE, RadialFamilyKind.GROW_OPEN):
        return t > 0.0 and rho < t
    if kind is RadialFamilyKind.CLOSED_SCALE:
        return t > 0.0 and rho <= t
    raise UnsupportedKind(f"{kind.value} has no radial predicate")


def point_trajectory(x: float, domain: IntervalSet) -> IntervalSet:
    """The singleton family contains x exactly at time t = x."""
    return point(x).intersect(domain)


def radial_universe(radii) -> Universe:
    values = tuple(float(r) for r in radii)
    return Universe(values, payload=values)


def universe_from_points(points) -> Universe:
    """Map sampled R^2 coordinates to their radii (the radial reduction)."""
    coords = tuple((float(x), float(y)) for x, y in points)
    return Universe(coords, payload=tuple(math.hypot(x, y) for x, y in coords))


def _radius(universe: Universe, i: int) -> float:
    if universe.payload is not None:
        return universe.payload[i]
    return float(universe.elements[i])


def build_svf(kind: RadialFamilyKind, universe_spec, members=None) -> SetValuedFunction:
    """Assemble a set-valued function for a catalog kind.

    universe_spec is a list of radii (radial kinds), of reals (POINT), or of
    element identifiers (CONSTANT, together with the members subset). A
    prebuilt Universe is accepted as well.
    """
    domain = family_domain(kind)
    if kind in _RADIAL_KINDS:
        universe = universe_spec if isinstance(universe_spec, Universe) \
            else radial_universe(universe_spec)
        trajectories = tuple(radial_trajectory(kind, _radius(universe, i))
                             for i in range(len(universe)))
    elif kind is RadialFamilyKind.POINT:
        universe = universe_spec if isinstance(universe_spec, Universe) \
            else radial_universe(universe_spec)
        trajectories = tuple(point_trajectory(_radius(universe, i), domain)
                             for i in range(len(universe)))
    elif kind is RadialFamilyKind.CONSTANT:
        universe = universe_spec if isinstance(universe_spec, Universe) \
            else Universe(tuple(universe_spec))
        mask = members if isinstance(members, FiniteSet) \
            else FiniteSet.from_members(universe, members or ())
        trajectories = tuple(domain if mask.contains_index(i) else EMPTY
                             for i in range(len(universe)))
    else:
        raise UnsupportedKind(f"cannot build an SVF for {kind!r}")
    return SetValuedFunction(universe, domain, trajectories)


def open_disk_mask(universe: Universe) -> FiniteSet:
    """Elements strictly inside the unit disk (rho < 1)."""
    bits = 0
    for i in range(len(universe)):
        if _radius(universe, i) < 1.0:
            bits |= 1 << i
    return FiniteSet(universe, bits)


def closed_disk_mask(universe: Universe) -> FiniteSet:
    """Elements inside or on the unit circle (rho <= 1)."""
    bits = 0
    for i in range(len(universe)):
        if _radius(universe, i) <= 1.0:
            bits |= 1 << i
    return FiniteSet(universe, bits)
