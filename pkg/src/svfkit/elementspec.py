"""Parametrized point families and per-element differentiation.

A family assigns to each parameter tuple a moving point in R^n; sampling at
a time t yields a point cloud whose index order realizes the bijection
between time slices. Derivatives are per element, analytic where the
catalog provides them, central differences otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .errors import NoAnalyticDerivative, OutOfDomain, ShapeMismatch
from .intervals import IntervalSet, full_line, ray_above
from .verdicts import Verdict

Evaluator = Callable[[tuple, float], tuple]

DEFAULT_STEP = 1e-4
ANALYTIC_TOL = 1e-9
CENTRAL_TOL = 1e-6


@dataclass(frozen=True)
class ParamFamily:
    name: str
    dim: int
    param_grid: tuple[tuple[float, ...], ...]
    evaluate: Evaluator
    derivative: Evaluator | None = None
    time_domain: IntervalSet = field(default_factory=full_line)


@dataclass(frozen=True)
class PointCloud:
    """Sampled points, index-aligned with the family's parameter grid."""

    points: tuple[tuple[float, ...], ...]

    def __len__(self) -> int:
        return len(self.points)

    def dim(self) -> int:
        return len(self.points[0]) if self.points else 0


def family_sample(family: ParamFamily, t: float) -> PointCloud:
    """Evaluate every grid parameter at time t."""
    if not family.time_domain.contains(t):
        raise OutOfDomain(f"t = {t!r} is outside the family's time domain")
    return PointCloud(tuple(tuple(family.evaluate(lam, t)) for lam in family.param_grid))


def family_derivative(family: ParamFamily, t: float, method: str = "analytic",
                      h: float = DEFAULT_STEP) -> PointCloud:
    """Per-element time derivative at t, index-aligned with the grid."""
    if method == "analytic":
        if family.derivative is None:
            raise NoAnalyticDerivative(f"{family.name} has no analytic derivative")
        if not family.time_domain.contains(t):
            raise OutOfDomain(f"t = {t!r} is outside the family's time domain")
        return PointCloud(tuple(tuple(family.derivative(lam, t))
                                for lam in family.param_grid))
    if method == "central_difference":
        if h <= 0:
            raise ValueError("step h must be positive")
        if not (family.time_domain.contains(t - h) and family.time_domain.contains(t + h)):
            raise OutOfDomain(f"t +- h leaves the time domain at t = {t!r}, h = {h!r}")
        ahead = family_sample(family, t + h)
        behind = family_sample(family, t - h)
        scale = 1.0 / (2.0 * h)
        return PointCloud(tuple(
            tuple((pa - pb) * scale for pa, pb in zip(a, b))
            for a, b in zip(ahead.points, behind.points)))
    raise ValueError(f"unknown method {method!r}")


def elementwise_add(a: PointCloud, b: PointCloud) -> PointCloud:
    """Componentwise sum at matching indices (matching parameters)."""
    if len(a) != len(b) or a.dim() != b.dim():
        raise ShapeMismatch(f"clouds disagree: {len(a)}x{a.dim()} vs {len(b)}x{b.dim()}")
    return PointCloud(tuple(tuple(x + y for x, y in zip(p, q))
                            for p, q in zip(a.points, b.points)))


def injectivity_check(family: ParamFamily, t_probes, tol: float = 1e-9) -> Verdict:
    """Do distinct parameters stay at distinct points at every probe time?"""
    grid = family.param_grid
    for t in t_probes:
        cloud = family_sample(family, t).points
        for i in range(len(cloud)):
            for j in range(i + 1, len(cloud)):
                dist = math.dist(cloud[i], cloud[j])
                if dist <= tol:
                    return Verdict(False, "element-injectivity",
                                   witness_element=(grid[i], grid[j]),
                                   witness_detail=f"points {dist:.3e} apart at t = {t}")
    return Verdict(True, "element-injectivity")


def shift_error(family: ParamFamily, t: float, method: str = "analytic",
                h: float = DEFAULT_STEP) -> float:
    """Max per-element distance between value(t) + derivative(t) and value(t+1)."""
    if not family.time_domain.contains(t + 1.0):
        raise OutOfDomain(f"t + 1 leaves the time domain at t = {t!r}")
    moved = elementwise_add(family_sample(family, t),
                            family_derivative(family, t, method, h))
    ahead = family_sample(family, t + 1.0)
    return max((math.dist(p, q) for p, q in zip(moved.points, ahead.points)),
               default=0.0)


def shift_check(family: ParamFamily, t: float, method: str = "analytic",
                h: float = DEFAULT_STEP, tol: float | None = None) -> Verdict:
    """Does one unit-time step equal one derivative step?

    Exact (up to rounding) for families linear in t; may legitimately fail
    for anything else.
    """
    if tol is None:
        tol = ANALYTIC_TOL if method == "analytic" else CENTRAL_TOL
    err = shift_error(family, t, method, h)
    if err <= tol:
        return Verdict(True, "unit-shift-identity",
                       witness_detail=f"max deviation {err:.3e} <= {tol:.1e}")
    return Verdict(False, "unit-shift-identity", witness_element=t,
                   witness_detail=f"max deviation {err:.3e} exceeds {tol:.1e}")


# ---------------------------------------------------------------------------
# catalog

def disk_family(p_values, q_values) -> ParamFamily:
    """Moving disk points (t p cos q, t p sin q) on t > 0."""
    grid = tuple((float(p), float(q)) for p in p_values for q in q_values)

    def evaluate(lam, t):
        p, q = lam
        return (t * p * math.cos(q), t * p * math.sin(q))

    def derivative(lam, t):
        p, q = lam
        return (p * math.cos(q), p * math.sin(q))

    return ParamFamily("disk", 2, grid, evaluate, derivative,
                       time_domain=ray_above(0.0))


def scaled_direction_family(vectors) -> ParamFamily:
    """Rays through the origin: value t * v per direction vector v."""
    grid = tuple(tuple(float(c) for c in v) for v in vectors)
    dim = len(grid[0]) if grid else 0

    def evaluate(lam, t):
        return tuple(t * c for c in lam)

    def derivative(lam, t):
        return lam

    return ParamFamily("scaled-direction", dim, grid, evaluate, derivative)


def affine_family(anchors_and_velocities) -> ParamFamily:
    """Straight-line motion u + t v; parameters are (u, v) pairs flattened."""
    pairs = [(tuple(map(float, u)), tuple(map(float, v)))
             for u, v in anchors_and_velocities]
    if pairs and any(len(u) != len(pairs[0][0]) or len(v) != len(pairs[0][0])
                     for u, v in pairs):
        raise ShapeMismatch("all anchors and velocities must share a dimension")
    dim = len(pairs[0][0]) if pairs else 0
    grid = tuple(u + v for u, v in pairs)

    def evaluate(lam, t):
        u, v = lam[:dim], lam[dim:]
        return tuple(a + t * b for a, b in zip(u, v))

    def derivative(lam, t):
        return lam[dim:]

    return ParamFamily("affine", dim, grid, evaluate, derivative)


def custom_family(name: str, dim: int, param_grid, evaluate: Evaluator,
                  derivative: Evaluator | None = None,
                  time_domain: IntervalSet | None = None) -> ParamFamily:
    """Escape hatch for user evaluators; finite differences unless a
    derivative is supplied."""
    return ParamFamily(name, dim, tuple(tuple(lam) for lam in param_grid),
                       evaluate, derivative,
                       time_domain=time_domain if time_domain is not None else full_line())
