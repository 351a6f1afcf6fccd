import pytest

from svfkit.errors import UnsupportedKind
from svfkit.geometry import (RadialFamilyKind, build_svf, closed_disk_mask,
                             family_domain, membership_predicate,
                             open_disk_mask, point_trajectory, radial_trajectory,
                             universe_from_points)
from svfkit.intervals import EMPTY, full_line, interval, point, ray_above
from svfkit.svf import (converges_at_infinity, delta_trajectory, monotonicity,
                        Monotonicity, svf_at)

import oracles

K = RadialFamilyKind
ALL_DISK_KINDS = (K.OPEN_INNER, K.CLOSED_INNER, K.CLOSED_OUTER, K.OPEN_OUTER,
                  K.OPEN_SCALE, K.CLOSED_SCALE, K.GROW_OPEN)


def test_inner_open_threshold_formula():
    # entry time is literally 1/(1-rho), reproducing the documented value 10
    got = radial_trajectory(K.OPEN_INNER, 0.9)
    assert got == ray_above(1.0 / (1.0 - 0.9))
    assert abs(got.intervals[0].lo.value - 10.0) < 1e-12


def test_outer_closed_threshold_formula():
    got = radial_trajectory(K.CLOSED_OUTER, 1.1)
    assert got == interval(1.0, 1.0 / (1.1 - 1.0), False, True)


def test_boundary_radius_cases():
    assert radial_trajectory(K.OPEN_INNER, 1.0) == EMPTY
    assert radial_trajectory(K.OPEN_OUTER, 1.0) == ray_above(1.0)
    assert radial_trajectory(K.CLOSED_OUTER, 1.0) == ray_above(1.0)
    assert radial_trajectory(K.CLOSED_INNER, 0.0) == ray_above(1.0)
    assert radial_trajectory(K.OPEN_SCALE, 0.0) == ray_above(0.0)
    assert radial_trajectory(K.CLOSED_SCALE, 0.5) == ray_above(0.5, closed=True)
    assert radial_trajectory(K.CLOSED_OUTER, 2.0) == EMPTY
    assert radial_trajectory(K.OPEN_OUTER, 3.0) == EMPTY


def test_radial_trajectory_rejects_negative_rho():
    with pytest.raises(ValueError):
        radial_trajectory(K.OPEN_INNER, -0.1)


def test_point_and_constant_have_no_radial_trajectory():
    for kind in (K.POINT, K.CONSTANT):
        with pytest.raises(UnsupportedKind):
            radial_trajectory(kind, 0.5)


def test_trajectories_match_raw_predicate():
    """The closed-form algebra agrees with the defining inequality at every
    probe around the computed endpoints.

    The raw endpoint values are excluded: re-evaluating a strict inequality
    at a rounded threshold is noise at the last ulp, while probes 2^-20
    away clear the rounding error by nine orders of magnitude.
    """
    rhos = [0.0, 0.1, 0.25, 0.5, 0.9, 0.99, 1.0, 1.01, 1.1, 1.5, 2.0, 3.0]
    for kind in ALL_DISK_KINDS:
        domain = family_domain(kind)
        for rho in rhos:
            traj = radial_trajectory(kind, rho)
            for t in oracles.probe_points(traj, domain, include_endpoints=False):
                if not domain.contains(t):
                    continue
                assert traj.contains(t) == membership_predicate(kind, rho, t), \
                    (kind, rho, t)


def test_point_trajectory():
    assert point_trajectory(1.0, full_line()) == point(1.0)
    assert point_trajectory(0.5, full_line()) == point(0.5)
    assert point_trajectory(5.0, interval(0, 2, False, False)) == EMPTY


def test_build_svf_slice_example():
    f = build_svf(K.OPEN_INNER, [0.25, 0.9])
    assert svf_at(f, 2.0).members() == (0.25,)


def test_point_family_slice():
    f = build_svf(K.POINT, [0.5, 1.0, 1.7])
    assert svf_at(f, 1.7).members() == (1.7,)
    assert svf_at(f, 0.3).is_empty()


def test_constant_family():
    f = build_svf(K.CONSTANT, ["a", "b", "c"], members=["b"])
    assert svf_at(f, -3.0).members() == ("b",)
    assert svf_at(f, 100.0).members() == ("b",)


def test_universe_from_points_maps_radii():
    u = universe_from_points([(0.6, 0.8), (3.0, 4.0)])
    assert u.payload == (1.0, 5.0)
    mask = closed_disk_mask(u)
    assert mask.members() == ((0.6, 0.8),)


def test_boundary_discipline(radii):
    """The unit-circle element blocks exactly the non-convergent pairings."""
    convergent = {(K.OPEN_INNER, "open"), (K.CLOSED_INNER, "open"),
                  (K.CLOSED_OUTER, "closed"), (K.OPEN_OUTER, "closed")}
    for kind in (K.OPEN_INNER, K.CLOSED_INNER, K.CLOSED_OUTER, K.OPEN_OUTER):
        f = build_svf(kind, radii)
        for target_name, target in (("open", open_disk_mask(f.universe)),
                                    ("closed", closed_disk_mask(f.universe))):
            boundary_delta = delta_trajectory(f, target, 1.0)
            verdict = converges_at_infinity(f, target)
            if (kind, target_name) in convergent:
                assert boundary_delta.bounded_above(), (kind, target_name)
                assert verdict.holds, (kind, target_name)
            else:
                assert not boundary_delta.bounded_above(), (kind, target_name)
                assert not verdict.holds and verdict.witness_element == 1.0


def test_monotonicity_tags(radii):
    assert monotonicity(build_svf(K.OPEN_INNER, radii)) is Monotonicity.EXPANDING
    assert monotonicity(build_svf(K.CLOSED_INNER, radii)) is Monotonicity.EXPANDING
    assert monotonicity(build_svf(K.CLOSED_OUTER, radii)) is Monotonicity.SHRINKING
    assert monotonicity(build_svf(K.OPEN_OUTER, radii)) is Monotonicity.SHRINKING
    assert monotonicity(build_svf(K.CONSTANT, ["a"], members=["a"])) is Monotonicity.CONSTANT
