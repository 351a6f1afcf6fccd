"""Finite universes and membership masks (the Boolean algebra of subsets)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import UniverseMismatch


@dataclass(frozen=True)
class Universe:
    """A non-empty ordered collection of unique opaque element identifiers.

    payload optionally attaches one value per element (e.g. a radius used by
    the geometry catalog); it does not participate in equality.
    """

    elements: tuple
    payload: tuple | None = None

    def __post_init__(self):
        if not self.elements:
            raise ValueError("universe must not be empty")
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("universe identifiers must be unique")
        if self.payload is not None and len(self.payload) != len(self.elements):
            raise ValueError("payload length must match universe size")

    def __len__(self) -> int:
        return len(self.elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Universe) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def index_of(self, element) -> int:
        try:
            return self.elements.index(element)
        except ValueError:
            raise UniverseMismatch(f"{element!r} is not in the universe") from None


def _check_same(a: "FiniteSet", b: "FiniteSet") -> None:
    if a.universe != b.universe:
        raise UniverseMismatch("operands live over different universes")


@dataclass(frozen=True)
class FiniteSet:
    """A subset of a Universe, stored as one membership bit per element."""

    universe: Universe
    bits: int = 0

    def __post_init__(self):
        if self.bits >> len(self.universe):
            raise ValueError("mask has bits outside the universe")

    @classmethod
    def from_members(cls, universe: Universe, members: Iterable) -> "FiniteSet":
        bits = 0
        for m in members:
            bits |= 1 << universe.index_of(m)
        return cls(universe, bits)

    @classmethod
    def empty(cls, universe: Universe) -> "FiniteSet":
        return cls(universe, 0)

    @classmethod
    def full(cls, universe: Universe) -> "FiniteSet":
        return cls(universe, (1 << len(universe)) - 1)

    def members(self) -> tuple:
        return tuple(el for i, el in enumerate(self.universe.elements)
                     if self.bits >> i & 1)

    def contains(self, element) -> bool:
        return bool(self.bits >> self.universe.index_of(element) & 1)

    def contains_index(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def is_empty(self) -> bool:
        return self.bits == 0

    def __len__(self) -> int:
        return self.bits.bit_count()

    def union(self, other: "FiniteSet") -> "FiniteSet":
        _check_same(self, other)
        return FiniteSet(self.universe, self.bits | other.bits)

    def intersect(self, other: "FiniteSet") -> "FiniteSet":
        _check_same(self, other)
        return FiniteSet(self.universe, self.bits & other.bits)

    def sym_diff(self, other: "FiniteSet") -> "FiniteSet":
        _check_same(self, other)
        return FiniteSet(self.universe, self.bits ^ other.bits)

    def minus(self, other: "FiniteSet") -> "FiniteSet":
        _check_same(self, other)
        return FiniteSet(self.universe, self.bits & ~other.bits)

    def complement(self) -> "FiniteSet":
        return FiniteSet(self.universe, ~self.bits & (1 << len(self.universe)) - 1)

    def is_subset(self, other: "FiniteSet") -> bool:
        _check_same(self, other)
        return self.bits & ~other.bits == 0

    def __str__(self) -> str:
        return "{" + ", ".join(str(m) for m in self.members()) + "}"


def apply(a: FiniteSet, b: FiniteSet, op: str) -> FiniteSet:
    """Element-wise Boolean algebra by operation name."""
    try:
        method = {"union": a.union, "intersect": a.intersect,
                  "sym_diff": a.sym_diff, "minus": a.minus}[op]
    except KeyError:
        raise ValueError(f"unknown op {op!r}") from None
    return method(b)
