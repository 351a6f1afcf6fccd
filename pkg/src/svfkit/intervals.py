"""Exact finite unions of real intervals with open/closed endpoints.

Every Boolean operation is decided symbolically on the atomic regions cut
out by the operands' endpoint values, so results are exact in binary64 and
never rely on sampling. Values are immutable; all operations are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Iterator, NamedTuple

from .errors import DomainBoundedAbove, MalformedInterval, OutOfDomain

NEG_INF = float("-inf")
POS_INF = float("inf")


class Endpoint(NamedTuple):
    value: float
    closed: bool


class Interval(NamedTuple):
    lo: Endpoint
    hi: Endpoint


class GermStatus(Enum):
    """Stable membership status on a terminal ray or one-sided neighborhood."""

    IN = "in"
    OUT = "out"
    # Unreachable for finite unions (the last piece is a ray or is bounded);
    # kept so richer representations can share the interface.
    OSCILLATES = "oscillates"


def _check_interval(iv: Interval) -> Interval:
    for ep in iv:
        if math.isnan(ep.value):
            raise MalformedInterval("endpoint value is NaN")
        if math.isinf(ep.value) and ep.closed:
            raise MalformedInterval("an infinite endpoint cannot be closed")
    if iv.lo.value > iv.hi.value:
        raise MalformedInterval(f"lo {iv.lo.value!r} exceeds hi {iv.hi.value!r}")
    if iv.lo.value == iv.hi.value and not (iv.lo.closed and iv.hi.closed):
        raise MalformedInterval("a single-point interval must be closed on both sides")
    return iv


def _coerce(raw) -> Interval:
    if isinstance(raw, Interval):
        return _check_interval(raw)
    lo, lo_closed, hi, hi_closed = raw
    return _check_interval(Interval(Endpoint(float(lo), bool(lo_closed)),
                                    Endpoint(float(hi), bool(hi_closed))))


@dataclass(frozen=True)
class IntervalSet:
    """Canonical union of pairwise disjoint, non-adjacent, sorted intervals."""

    intervals: tuple[Interval, ...] = ()

    def is_empty(self) -> bool:
        return not self.intervals

    def contains(self, v: float) -> bool:
        for lo, hi in self.intervals:
            if v < lo.value or (v == lo.value and not lo.closed):
                return False
            if v < hi.value or (v == hi.value and hi.closed):
                return True
        return False

    def bounded_above(self) -> bool:
        return not self.intervals or self.intervals[-1].hi.value < POS_INF

    def bounded_below(self) -> bool:
        return not self.intervals or self.intervals[0].lo.value > NEG_INF

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return " u ".join(_format_interval(iv) for iv in self.intervals)

    # convenience wrappers over the module-level algebra
    def union(self, other: "IntervalSet") -> "IntervalSet":
        return combine(self, other, "union")

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        return combine(self, other, "intersect")

    def xor(self, other: "IntervalSet") -> "IntervalSet":
        return combine(self, other, "xor")

    def minus(self, other: "IntervalSet") -> "IntervalSet":
        return combine(self, other, "minus")


def _format_value(v: float) -> str:
    if v == POS_INF:
        return "+inf"
    if v == NEG_INF:
        return "-inf"
    return repr(v) if v != int(v) else str(int(v))


def _format_interval(iv: Interval) -> str:
    left = "[" if iv.lo.closed else "("
    right = "]" if iv.hi.closed else ")"
    return f"{left}{_format_value(iv.lo.value)}, {_format_value(iv.hi.value)}{right}"


# ---------------------------------------------------------------------------
# constructors

EMPTY = IntervalSet()


def interval(lo: float, hi: float, lo_closed: bool = True, hi_closed: bool = True) -> IntervalSet:
    return IntervalSet((_coerce((lo, lo_closed, hi, hi_closed)),))


def closed_interval(lo: float, hi: float) -> IntervalSet:
    return interval(lo, hi, True, True)


def open_interval(lo: float, hi: float) -> IntervalSet:
    if lo == hi:
        return EMPTY
    return interval(lo, hi, False, False)


def point(v: float) -> IntervalSet:
    return interval(v, v, True, True)


def ray_above(c: float, closed: bool = False) -> IntervalSet:
    return interval(c, POS_INF, closed, False)


def ray_below(c: float, closed: bool = False) -> IntervalSet:
    return interval(NEG_INF, c, False, closed)


def full_line() -> IntervalSet:
    return interval(NEG_INF, POS_INF, False, False)


def normalize(raw: Iterable) -> IntervalSet:
    """Canonical disjoint sorted merge of arbitrary (possibly overlapping) pieces.

    Accepts Interval values or (lo, lo_closed, hi, hi_closed) tuples.
    Touching pieces merge whenever their union is one interval, e.g.
    [1,2] u (2,3] -> [1,3] but [1,2) u (2,3] stays split.
    """
    items = sorted((_coerce(r) for r in raw),
                   key=lambda iv: (iv.lo.value, not iv.lo.closed))
    merged: list[Interval] = []
    for iv in items:
        if merged:
            cur = merged[-1]
            touching = iv.lo.value < cur.hi.value or (
                iv.lo.value == cur.hi.value and (iv.lo.closed or cur.hi.closed))
            if touching:
                if (iv.hi.value, iv.hi.closed) > (cur.hi.value, cur.hi.closed):
                    merged[-1] = Interval(cur.lo, iv.hi)
                continue
        merged.append(iv)
    return IntervalSet(tuple(merged))


# ---------------------------------------------------------------------------
# Boolean algebra via an atomic-region sweep

_OPS: dict[str, Callable[[bool, bool], bool]] = {
    "union": lambda a, b: a or b,
    "intersect": lambda a, b: a and b,
    "xor": lambda a, b: a is not b,
    "minus": lambda a, b: a and not b,
}


class _Walker:
    """Monotone membership probe over one operand's sorted intervals."""

    __slots__ = ("intervals", "i", "n")

    def __init__(self, iset: IntervalSet):
        self.intervals = iset.intervals
        self.i = 0
        self.n = len(iset.intervals)

    def at_point(self, v: float) -> bool:
        ivs = self.intervals
        while self.i < self.n and ivs[self.i].hi.value < v:
            self.i += 1
        if self.i == self.n:
            return False
        lo, hi = ivs[self.i]
        return ((lo.value < v or (lo.value == v and lo.closed))
                and (v < hi.value or (v == hi.value and hi.closed)))

    def over_gap(self, x: float, y: float) -> bool:
        # The open region (x, y) contains no operand endpoint, so it is
        # either entirely inside one interval or entirely outside all.
        ivs = self.intervals
        while self.i < self.n and ivs[self.i].hi.value <= x:
            self.i += 1
        if self.i == self.n:
            return False
        lo, hi = ivs[self.i]
        return lo.value <= x and hi.value >= y


def _region_stream(a: IntervalSet, b: IntervalSet) -> Iterator[tuple[bool, bool, float, bool, float, bool]]:
    """Yield (in_a, in_b, lo_value, lo_closed, hi_value, hi_closed) per region.

    The atomic regions tile the line in ascending order: an open gap before
    the first endpoint value, then alternately each endpoint value as a
    point region and the open gap to the next one, then a final open gap.
    Within one region membership in each operand is constant.
    """
    values: set[float] = set()
    for iset in (a, b):
        for lo, hi in iset.intervals:
            if NEG_INF < lo.value:
                values.add(lo.value)
            if hi.value < POS_INF:
                values.add(hi.value)
    if not values:
        # Operands have no finite endpoints: each is empty or the full line.
        yield (bool(a.intervals), bool(b.intervals), NEG_INF, False, POS_INF, False)
        return
    wa, wb = _Walker(a), _Walker(b)
    prev = NEG_INF
    for v in sorted(values):
        if prev < v:
            yield (wa.over_gap(prev, v), wb.over_gap(prev, v),
                   prev, False, v, False)
        yield (wa.at_point(v), wb.at_point(v), v, True, v, True)
        prev = v
    yield (wa.over_gap(prev, POS_INF), wb.over_gap(prev, POS_INF),
           prev, False, POS_INF, False)


def _assemble_runs(stream, fn) -> IntervalSet:
    """Merge consecutive selected regions into canonical intervals."""
    out: list[Interval] = []
    run_lo_v = run_lo_c = run_hi_v = run_hi_c = None
    for ia, ib, lo_v, lo_c, hi_v, hi_c in stream:
        if fn(ia, ib):
            if run_lo_v is None:
                run_lo_v, run_lo_c = lo_v, lo_c
            run_hi_v, run_hi_c = hi_v, hi_c
        elif run_lo_v is not None:
            out.append(Interval(Endpoint(run_lo_v, run_lo_c),
                                Endpoint(run_hi_v, run_hi_c)))
            run_lo_v = None
    if run_lo_v is not None:
        out.append(Interval(Endpoint(run_lo_v, run_lo_c),
                            Endpoint(run_hi_v, run_hi_c)))
    return IntervalSet(tuple(out))


def combine(a: IntervalSet, b: IntervalSet, op: str) -> IntervalSet:
    """Exact Boolean combination with correct endpoint openness."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}; expected one of {sorted(_OPS)}") from None
    return _assemble_runs(_region_stream(a, b), fn)


def complement(a: IntervalSet, domain: IntervalSet) -> IntervalSet:
    """domain minus a, requiring a to lie inside domain."""
    def fn(ia: bool, ib: bool) -> bool:
        if ia and not ib:
            raise OutOfDomain("set reaches outside the domain")
        return ib and not ia
    return _assemble_runs(_region_stream(a, domain), fn)


def is_subset(a: IntervalSet, b: IntervalSet) -> bool:
    return all(not (ia and not ib) for ia, ib, *_ in _region_stream(a, b))


# ---------------------------------------------------------------------------
# local behaviour: boundedness, accumulation, germs

def bounded_above(a: IntervalSet, domain: IntervalSet | None = None) -> bool:
    """True iff a misses some terminal ray [M, +inf).

    When the optional domain is supplied it must itself be unbounded above,
    otherwise behaviour at infinity is undefined.
    """
    if domain is not None and domain.bounded_above():
        raise DomainBoundedAbove("the domain has a finite supremum")
    return a.bounded_above()


def accumulates_at(a: IntervalSet, t0: float, side: str = "both",
                   punctured: bool = True) -> bool:
    """Does every (one- or two-sided) neighborhood of t0 intersect a?

    punctured=True excludes t0 itself from the neighborhoods.
    """
    from_left = any(lo.value < t0 <= hi.value for lo, hi in a.intervals)
    from_right = any(lo.value <= t0 < hi.value for lo, hi in a.intervals)
    if side == "left":
        hit = from_left
    elif side == "right":
        hit = from_right
    elif side == "both":
        hit = from_left or from_right
    else:
        raise ValueError(f"unknown side {side!r}")
    if not punctured:
        hit = hit or a.contains(t0)
    return hit


def germ_at_infinity(a: IntervalSet) -> GermStatus:
    """Membership status on a terminal ray: IN iff a ends with a ray."""
    if a.intervals and a.intervals[-1].hi.value == POS_INF:
        return GermStatus.IN
    return GermStatus.OUT


def germ_at_point(a: IntervalSet, t0: float, side: str) -> GermStatus:
    """Membership status just left/right of t0 (the value at t0 is ignored).

    Finite unions always stabilize on one side of a point, so the result is
    IN or OUT, never OSCILLATES.
    """
    if side == "left":
        covered = any(lo.value < t0 <= hi.value for lo, hi in a.intervals)
    elif side == "right":
        covered = any(lo.value <= t0 < hi.value for lo, hi in a.intervals)
    else:
        raise ValueError(f"unknown side {side!r}")
    return GermStatus.IN if covered else GermStatus.OUT


# ---------------------------------------------------------------------------
# serialization: [lo, lo_closed, hi, hi_closed] with "-inf"/"+inf" sentinels

def _value_to_json(v: float):
    if v == POS_INF:
        return "+inf"
    if v == NEG_INF:
        return "-inf"
    return v


def _value_from_json(raw) -> float:
    if raw == "+inf":
        return POS_INF
    if raw == "-inf":
        return NEG_INF
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise MalformedInterval(f"bad endpoint value {raw!r}")
    return float(raw)


def to_json(a: IntervalSet) -> list:
    return [[_value_to_json(lo.value), lo.closed, _value_to_json(hi.value), hi.closed]
            for lo, hi in a.intervals]


def from_json(data) -> IntervalSet:
    if not isinstance(data, list):
        raise MalformedInterval("interval set must be a JSON array")
    pieces = []
    for row in data:
        if not isinstance(row, list) or len(row) != 4:
            raise MalformedInterval(f"bad interval row {row!r}")
        lo, lo_closed, hi, hi_closed = row
        if not isinstance(lo_closed, bool) or not isinstance(hi_closed, bool):
            raise MalformedInterval(f"bad interval row {row!r}")
        pieces.append((_value_from_json(lo), lo_closed, _value_from_json(hi), hi_closed))
    return normalize(pieces)
