import itertools

import pytest

from svfkit.errors import UniverseMismatch
from svfkit.sets import FiniteSet, Universe, apply


def test_universe_rejects_empty():
    with pytest.raises(ValueError):
        Universe(())


def test_universe_rejects_duplicates():
    with pytest.raises(ValueError):
        Universe(("a", "a"))


def test_universe_payload_must_align():
    with pytest.raises(ValueError):
        Universe(("a", "b"), payload=(1.0,))


def test_sym_diff_example():
    u = Universe((1, 2, 3, 4))
    a = FiniteSet.from_members(u, [1, 2])
    b = FiniteSet.from_members(u, [2, 3])
    assert a.sym_diff(b).members() == (1, 3)


def test_sym_diff_self_is_empty():
    u = Universe(("a", "b"))
    a = FiniteSet.from_members(u, ["a"])
    assert a.sym_diff(a).is_empty()


def test_mismatched_universes_rejected():
    a = FiniteSet.from_members(Universe(("a", "b")), ["a"])
    b = FiniteSet.from_members(Universe(("x", "y")), ["x"])
    with pytest.raises(UniverseMismatch):
        a.union(b)


def test_apply_names():
    u = Universe(("a", "b"))
    a, b = FiniteSet(u, 0b01), FiniteSet(u, 0b10)
    assert apply(a, b, "union").bits == 0b11
    with pytest.raises(ValueError):
        apply(a, b, "xor")


def test_exhaustive_truth_table_small_universes():
    """Every operation agrees with Python set algebra for |X| <= 4."""
    for n in range(1, 5):
        u = Universe(tuple(range(n)))
        full = set(range(n))
        for abits, bbits in itertools.product(range(1 << n), repeat=2):
            a, b = FiniteSet(u, abits), FiniteSet(u, bbits)
            sa, sb = set(a.members()), set(b.members())
            assert set(a.union(b).members()) == sa | sb
            assert set(a.intersect(b).members()) == sa & sb
            assert set(a.sym_diff(b).members()) == sa ^ sb
            assert set(a.minus(b).members()) == sa - sb
            assert set(a.complement().members()) == full - sa


def test_sym_diff_decompositions_random(rng):
    """sym_diff(a, b) = (a minus b) union (b minus a), and complements agree."""
    u = Universe(tuple(f"x{i}" for i in range(8)))
    for _ in range(1000):
        a = FiniteSet(u, rng.getrandbits(8))
        b = FiniteSet(u, rng.getrandbits(8))
        sym = a.sym_diff(b)
        assert sym == a.minus(b).union(b.minus(a))
        assert sym == a.complement().sym_diff(b.complement())


def test_subset_and_members():
    u = Universe(("p", "q", "r"))
    small = FiniteSet.from_members(u, ["q"])
    big = FiniteSet.from_members(u, ["p", "q"])
    assert small.is_subset(big)
    assert not big.is_subset(small)
    assert big.contains("p") and not big.contains("r")
    assert len(big) == 2
