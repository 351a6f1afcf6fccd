import math
import random

import pytest
from hypothesis import given, strategies as st

from svfkit.errors import DomainBoundedAbove, MalformedInterval, OutOfDomain
from svfkit.intervals import (EMPTY, GermStatus, IntervalSet, accumulates_at,
                              bounded_above, closed_interval, combine,
                              complement, from_json, full_line,
                              germ_at_infinity, germ_at_point, interval,
                              is_subset, normalize, open_interval, point,
                              ray_above, ray_below, to_json)

import oracles

INF = float("inf")


# ---------------------------------------------------------------------------
# normalize

def test_normalize_merges_overlap():
    got = normalize([(1, True, 3, True), (2, True, 5, True)])
    assert got == closed_interval(1, 5)


def test_normalize_keeps_open_gap():
    got = normalize([(1, True, 2, False), (2, False, 3, True)])
    assert got == IntervalSet(interval(1, 2, True, False).intervals
                              + interval(2, 3, False, True).intervals)


def test_normalize_empty_input():
    assert normalize([]) == EMPTY


def test_normalize_merges_half_closed_touch():
    assert normalize([(1, True, 2, True), (2, False, 3, True)]) == closed_interval(1, 3)


def test_normalize_is_idempotent(rng):
    for _ in range(200):
        pieces = [_random_piece(rng) for _ in range(rng.randint(0, 4))]
        once = normalize(pieces)
        assert normalize(once.intervals) == once


def test_normalize_rejects_inverted():
    with pytest.raises(MalformedInterval):
        normalize([(3, True, 1, True)])


def test_normalize_rejects_open_point():
    with pytest.raises(MalformedInterval):
        normalize([(1, False, 1, True)])


def test_normalize_rejects_closed_infinity():
    with pytest.raises(MalformedInterval):
        normalize([(1, True, INF, True)])


def test_normalize_rejects_nan():
    with pytest.raises(MalformedInterval):
        normalize([(float("nan"), True, 1, True)])


# ---------------------------------------------------------------------------
# combine

def test_xor_self_is_empty():
    a = open_interval(1, INF)
    assert a.xor(a) == EMPTY


def test_xor_of_nested_rays():
    got = combine(ray_above(10), ray_above(1), "xor")
    assert got == interval(1, 10, False, True)
    for t, inside in ((2, True), (10, True), (11, False), (1, False)):
        assert got.contains(t) is inside


def test_intersect_point_with_open():
    assert point(1).intersect(open_interval(0, 2)) == point(1)


def test_union_merges_adjacent_closed():
    assert closed_interval(1, 2).union(interval(2, 3, False, True)) == closed_interval(1, 3)


def test_union_keeps_double_open_gap():
    got = interval(1, 2, True, False).union(interval(2, 3, False, True))
    assert len(got.intervals) == 2


def test_unknown_op_rejected():
    with pytest.raises(ValueError):
        combine(EMPTY, EMPTY, "nand")


# ---------------------------------------------------------------------------
# complement

def test_complement_puncture():
    got = complement(point(1), open_interval(0, 2))
    assert got == open_interval(0, 1).union(open_interval(1, 2))


def test_complement_of_empty_is_domain():
    domain = open_interval(0, 2)
    assert complement(EMPTY, domain) == domain


def test_complement_of_tail():
    got = complement(interval(1, 10, False, True), ray_above(1))
    assert got == ray_above(10)


def test_complement_is_involutive(rng):
    domain = full_line()
    for _ in range(100):
        a = normalize(_random_piece(rng) for _ in range(rng.randint(0, 3)))
        assert complement(complement(a, domain), domain) == a


def test_complement_rejects_escapee():
    with pytest.raises(OutOfDomain):
        complement(closed_interval(0, 5), open_interval(1, 4))


# ---------------------------------------------------------------------------
# boundedness, accumulation, germs

def test_bounded_above_tail():
    assert bounded_above(interval(1, 10, False, True)) is True


def test_bounded_above_ray():
    assert bounded_above(ray_above(1)) is False


def test_bounded_above_last_piece_decides():
    assert bounded_above(open_interval(1, 2).union(closed_interval(5, 7))) is True


def test_bounded_above_rejects_capped_domain():
    with pytest.raises(DomainBoundedAbove):
        bounded_above(point(1), domain=closed_interval(0, 2))


@pytest.mark.parametrize("side,expected", [("right", True), ("left", False)])
def test_accumulates_at_ray_edge(side, expected):
    assert accumulates_at(open_interval(1, INF), 1, side, punctured=True) is expected


def test_accumulates_isolated_point():
    assert accumulates_at(point(1), 1, "both", punctured=True) is False
    assert accumulates_at(point(1), 1, "both", punctured=False) is True


def test_germ_at_infinity():
    assert germ_at_infinity(ray_above(10)) is GermStatus.IN
    assert germ_at_infinity(interval(1, 10, False, True)) is GermStatus.OUT
    assert germ_at_infinity(EMPTY) is GermStatus.OUT


def test_germ_at_point_both_sides():
    a = open_interval(0.8, INF)
    assert germ_at_point(a, 1, "left") is GermStatus.IN
    assert germ_at_point(a, 1, "right") is GermStatus.IN
    assert germ_at_point(point(1), 1, "left") is GermStatus.OUT


# ---------------------------------------------------------------------------
# algebraic identities, including the probe oracle

_LATTICE = [k * 0.25 for k in range(-20, 21)]


def _random_piece(rng):
    a = rng.choice(_LATTICE)
    roll = rng.random()
    if roll < 0.1:
        return (a, True, a, True)
    if roll < 0.25:
        return (a, rng.random() < 0.5, INF, False)
    if roll < 0.35:
        return (-INF, False, a, rng.random() < 0.5)
    b = rng.choice(_LATTICE)
    if a == b:
        return (a, True, a, True)
    if a > b:
        a, b = b, a
    return (a, rng.random() < 0.5, b, rng.random() < 0.5)


def _random_iset(rng, max_pieces=3):
    return normalize(_random_piece(rng) for _ in range(rng.randint(0, max_pieces)))


def _probe_agrees(a, b, op_name, result):
    ops = {"union": lambda x, y: x or y, "intersect": lambda x, y: x and y,
           "xor": lambda x, y: x != y, "minus": lambda x, y: x and not y}
    for t in oracles.probe_points(a, b, result):
        assert result.contains(t) == ops[op_name](a.contains(t), b.contains(t))


def test_symmetric_difference_identities(rng):
    domain = full_line()
    for _ in range(400):
        a, b = _random_iset(rng), _random_iset(rng)
        sym = a.xor(b)
        assert sym == a.minus(b).union(b.minus(a))
        assert sym == complement(a, domain).xor(complement(b, domain))
        _probe_agrees(a, b, "xor", sym)


def test_union_subadditivity(rng):
    for _ in range(300):
        a, b, c, d = (_random_iset(rng) for _ in range(4))
        left = a.union(c).xor(b.union(d))
        right = a.xor(b).union(c.xor(d))
        assert is_subset(left, right)


def test_all_ops_match_probe_oracle(rng):
    for _ in range(200):
        a, b = _random_iset(rng), _random_iset(rng)
        for op_name in ("union", "intersect", "xor", "minus"):
            _probe_agrees(a, b, op_name, combine(a, b, op_name))


@st.composite
def _iset_strategy(draw):
    n = draw(st.integers(0, 3))
    seed = draw(st.integers(0, 2**32 - 1))
    srng = random.Random(seed)
    return normalize(_random_piece(srng) for _ in range(n))


@given(_iset_strategy(), _iset_strategy())
def test_de_morgan_property(a, b):
    domain = full_line()
    union_c = complement(a.union(b), domain)
    both_c = complement(a, domain).intersect(complement(b, domain))
    assert union_c == both_c


@given(_iset_strategy())
def test_xor_with_empty_is_identity(a):
    assert a.xor(EMPTY) == a
    assert a.intersect(a) == a
    assert a.minus(a) == EMPTY


# ---------------------------------------------------------------------------
# serialization

def test_json_round_trip(rng):
    for _ in range(100):
        a = _random_iset(rng)
        assert from_json(to_json(a)) == a


def test_json_uses_infinity_sentinels():
    data = to_json(ray_above(1).union(ray_below(-3)))
    assert data[0][0] == "-inf"
    assert data[1][2] == "+inf"


def test_json_rejects_garbage():
    with pytest.raises(MalformedInterval):
        from_json([[1, True, 2]])
    with pytest.raises(MalformedInterval):
        from_json([[1, "yes", 2, True]])
    with pytest.raises(MalformedInterval):
        from_json({"lo": 1})


def test_format_text():
    assert str(interval(1, 10, False, True)) == "(1, 10]"
    assert str(EMPTY) == "{}"
    assert "u" in str(point(1).union(point(2)))
