import math
import random

import pytest

from mahler2d import CorpusConfig, generate_random_polygon, random_rational_polygon, validate_polygon

SQ2 = math.sqrt(0.5)


@pytest.fixture
def square_exact():
    return validate_polygon([(1, 1), (-1, 1), (-1, -1), (1, -1)])


@pytest.fixture
def square_float():
    return validate_polygon([(1.0, 1.0), (-1.0, 1.0), (-1.0, -1.0), (1.0, -1.0)])


@pytest.fixture
def diamond_exact():
    return validate_polygon([(1, 0), (0, 1), (-1, 0), (0, -1)])


@pytest.fixture
def inscribed_square():
    return validate_polygon([(SQ2, SQ2), (-SQ2, SQ2), (-SQ2, -SQ2), (SQ2, -SQ2)])


@pytest.fixture
def inscribed_hexagon():
    """Inscribed square corners plus the vertex pair at (0, +-1)."""
    return validate_polygon([(SQ2, SQ2), (0.0, 1.0), (-SQ2, SQ2), (-SQ2, -SQ2), (0.0, -1.0), (SQ2, -SQ2)])


@pytest.fixture
def rational_hexagon():
    return validate_polygon([(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)])


def random_float_polygon(seed: int, pairs: int, jitter: float = 0.2):
    cfg = CorpusConfig(count=1, vertex_pairs=pairs, seed=seed, radius_jitter=jitter)
    return generate_random_polygon(cfg, 0)


def rational_polygon(seed: int, pairs: int):
    return random_rational_polygon(random.Random(seed), pairs)
