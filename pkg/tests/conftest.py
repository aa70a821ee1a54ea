import random

import pytest

import tricount as tc
from tricount.geom import orientation

FAN5 = [(0, 0), (2, 2), (3, 7), (4, 8), (6, 18)]
# lex order: (0,0)=0, (2,2)=1, (3,7)=2, (4,8)=3, (6,18)=4; 2 is interior


def conv_points(n):
    """n points on a parabola: convex position, no collinear triple."""
    return [(k, k * k) for k in range(n)]


def random_points(n, seed, span=40):
    """Seeded general-position integer points via rejection."""
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        q = (rng.randrange(span), rng.randrange(span))
        if q in pts:
            continue
        if any(orientation(a, b, q) == 0
               for i, a in enumerate(pts) for b in pts[i + 1:]):
            continue
        pts.append(q)
    return pts


def random_point_set(n, seed):
    return tc.validate_point_set(random_points(n, seed))


@pytest.fixture(scope="session")
def fan5():
    return tc.validate_point_set(FAN5)


@pytest.fixture(scope="session")
def conv5():
    return tc.validate_point_set(conv_points(5))


@pytest.fixture(scope="session")
def conv6():
    return tc.validate_point_set(conv_points(6))


@pytest.fixture(scope="session")
def tri3():
    return tc.validate_point_set([(0, 0), (3, 1), (1, 4)])


def fan5_star_triangulation():
    """FAN5 hull plus all four spokes from the interior point (index 2)."""
    return frozenset({(0, 1), (1, 3), (3, 4), (0, 4),
                      (0, 2), (1, 2), (2, 3), (2, 4)})
