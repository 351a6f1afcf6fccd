"""Deterministic seeded generators for random analysis instances.

Endpoints are drawn from a quarter-integer lattice in [-10, 10], so they
are exact in binary64 and well separated, which keeps the sampling oracles
in the test suite exact as well.
"""

from __future__ import annotations

import random

from .intervals import EMPTY, IntervalSet, full_line, normalize
from .sets import FiniteSet, Universe
from .svf import SetValuedFunction

LATTICE_STEP = 0.25
PROFILES = ("eventually_constant", "monotone", "bounded_noise", "point_germ")

POS_INF = float("inf")
NEG_INF = float("-inf")


def _lattice(rng: random.Random, lo: float, hi: float) -> float:
    lo_k = int(lo / LATTICE_STEP)
    hi_k = int(hi / LATTICE_STEP)
    return rng.randint(lo_k, hi_k) * LATTICE_STEP


def bounded_piece(rng: random.Random, lo: float, hi: float) -> tuple:
    """One random bounded interval (occasionally a single point) in [lo, hi]."""
    a = _lattice(rng, lo, hi)
    if rng.random() < 0.15:
        return (a, True, a, True)
    b = _lattice(rng, lo, hi)
    if a == b:
        return (a, True, a, True)
    if a > b:
        a, b = b, a
    return (a, rng.random() < 0.5, b, rng.random() < 0.5)


def random_bounded_iset(rng: random.Random, lo: float = -10.0, hi: float = 10.0,
                        max_pieces: int = 2) -> IntervalSet:
    return normalize(bounded_piece(rng, lo, hi)
                     for _ in range(rng.randint(0, max_pieces)))


def random_away_iset(rng: random.Random, t0: float, gap: float = 2.0,
                     max_pieces: int = 2) -> IntervalSet:
    """Bounded pieces kept at least `gap` away from t0 on either side."""
    pieces = []
    for _ in range(rng.randint(0, max_pieces)):
        if rng.random() < 0.5:
            pieces.append(bounded_piece(rng, t0 - 10.0, t0 - gap))
        else:
            pieces.append(bounded_piece(rng, t0 + gap, t0 + 10.0))
    return normalize(pieces)


def random_mask(rng: random.Random, universe: Universe) -> FiniteSet:
    return FiniteSet(universe, rng.getrandbits(len(universe)))


def _traj_eventually_constant(rng: random.Random) -> IntervalSet:
    cut = _lattice(rng, 0.0, 8.0)
    pieces = []
    for _ in range(rng.randint(0, 2)):
        if cut - LATTICE_STEP > -10.0:
            pieces.append(bounded_piece(rng, -10.0, cut - LATTICE_STEP))
    if rng.random() < 0.5:
        start = _lattice(rng, cut, cut + 1.0)
        pieces.append((start, rng.random() < 0.5, POS_INF, False))
    return normalize(pieces)


def _traj_monotone(rng: random.Random, direction: str) -> IntervalSet:
    p = rng.random()
    if p < 0.15:
        return EMPTY
    if p < 0.30:
        return full_line()
    c = _lattice(rng, -8.0, 8.0)
    closed = rng.random() < 0.5
    if direction == "expanding":
        return normalize([(c, closed, POS_INF, False)])
    return normalize([(NEG_INF, False, c, closed)])


def _traj_bounded_noise(rng: random.Random) -> IntervalSet:
    return normalize(bounded_piece(rng, -10.0, 10.0)
                     for _ in range(rng.randint(0, 3)))


def _traj_point_germ(rng: random.Random, t0: float) -> IntervalSet:
    """Definite one-sided membership germs at t0 plus far-away noise."""
    u = rng.choice((0.25, 0.5, 1.0))
    pieces = []
    if rng.random() < 0.5:
        pieces.append((t0 - u, False, t0, False))
    if rng.random() < 0.5:
        pieces.append((t0, True, t0, True))
    if rng.random() < 0.5:
        pieces.append((t0, False, t0 + u, False))
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5:
            pieces.append(bounded_piece(rng, t0 - 10.0, t0 - 2.0))
        else:
            pieces.append(bounded_piece(rng, t0 + 2.0, t0 + 10.0))
    return normalize(pieces)


def traj_constant_near(rng: random.Random, t0: float, member: bool,
                       u: float = 0.25) -> IntervalSet:
    """Membership held constant on the full neighborhood (t0-u, t0+u)."""
    pieces = [] if not member else [(t0 - u, False, t0 + u, False)]
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5:
            pieces.append(bounded_piece(rng, t0 - 10.0, t0 - 2.0))
        else:
            pieces.append(bounded_piece(rng, t0 + 2.0, t0 + 10.0))
    return normalize(pieces)


def traj_constant_near_punctured(rng: random.Random, t0: float, member: bool,
                                 u: float = 0.25) -> IntervalSet:
    """Membership constant on the punctured neighborhood; t0 itself is random."""
    pieces = []
    if member:
        pieces += [(t0 - u, False, t0, False), (t0, False, t0 + u, False)]
    if rng.random() < 0.5:
        pieces.append((t0, True, t0, True))
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5:
            pieces.append(bounded_piece(rng, t0 - 10.0, t0 - 2.0))
        else:
            pieces.append(bounded_piece(rng, t0 + 2.0, t0 + 10.0))
    return normalize(pieces)


def standard_universe(universe_size: int) -> Universe:
    return Universe(tuple(f"e{i}" for i in range(universe_size)))


def svf_from_rng(rng: random.Random, universe_size: int, profile: str,
                 t0: float = 0.0) -> SetValuedFunction:
    if universe_size < 1:
        raise ValueError("universe_size must be at least 1")
    universe = standard_universe(universe_size)
    domain = full_line()
    if profile == "eventually_constant":
        trajs = tuple(_traj_eventually_constant(rng) for _ in range(universe_size))
    elif profile == "monotone":
        direction = rng.choice(("expanding", "shrinking"))
        trajs = tuple(_traj_monotone(rng, direction) for _ in range(universe_size))
    elif profile == "bounded_noise":
        trajs = tuple(_traj_bounded_noise(rng) for _ in range(universe_size))
    elif profile == "point_germ":
        trajs = tuple(_traj_point_germ(rng, t0) for _ in range(universe_size))
    else:
        raise ValueError(f"unknown profile {profile!r}; expected one of {PROFILES}")
    return SetValuedFunction(universe, domain, trajs)


def monotone_svf(rng: random.Random, universe_size: int,
                 direction: str) -> SetValuedFunction:
    universe = standard_universe(universe_size)
    return SetValuedFunction(universe, full_line(),
                             tuple(_traj_monotone(rng, direction)
                                   for _ in range(universe_size)))


def random_svf(seed: int, universe_size: int, profile: str,
               t0: float = 0.0) -> SetValuedFunction:
    """Deterministic in the seed; the profile controls trajectory shape."""
    return svf_from_rng(random.Random(seed), universe_size, profile, t0)
