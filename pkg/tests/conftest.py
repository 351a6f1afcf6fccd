import random

import pytest

from svfkit.geometry import RadialFamilyKind, build_svf

SAMPLE_RADII = (0.25, 0.5, 0.9, 1.0, 1.1, 1.5)


@pytest.fixture
def radii():
    return SAMPLE_RADII


@pytest.fixture
def inner_open_svf():
    return build_svf(RadialFamilyKind.OPEN_INNER, SAMPLE_RADII)


@pytest.fixture
def rng():
    return random.Random(20240901)
