# Copyright Cade Stocker 2026
"""
Point-set families: the extremal flat constructions behind the bounds, the
nine-point set on which local improvement gets stuck, and seeded random
instances for the verification suites.

All generators are deterministic. Coordinates of generated PointSets go
through six-decimal strings, so a set written to disk and read back is equal
to the one generated.
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Tuple

import numpy as np

from planetree.algorithms.approx import star
from planetree.algorithms.convexopt import longest_plane_tree_convex
from planetree.algorithms.oracle import longest_plane_tree_diameter_at_most
from planetree.errors import GeneralPositionError
from planetree.models.flatconvex import BOTTOM, TOP, FlatConvexSet, flat_length
from planetree.models.geom import Point, PointSet
from planetree.models.spantree import SpanningTree

logger = logging.getLogger(__name__)

# smallest triangle area a random instance may contain
MIN_TRIANGLE_AREA = Fraction(1, 10 ** 9)

MAX_DRAWS = 1000

STUCK_ALPHA = 17.0


def arc_Pn(n: int) -> FlatConvexSet:
    """n + 1 evenly spaced points, x = 0..n."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    return FlatConvexSet(range(n + 1))


def arc_crossing_tree(n: int) -> SpanningTree:
    """Maximum spanning tree of arc_Pn(n): points 1..n/2 join n, the rest join 0."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    half = n // 2
    edges = [(i, n) for i in range(1, half + 1)] + [(0, i) for i in range(half + 1, n + 1)]
    return SpanningTree.trusted(n + 1, edges)


def arc_crossing_length(n: int) -> int:
    return sum(max(i, n - i) for i in range(1, n)) + n


def diameter_gaps(d: int) -> Tuple[int, ...]:
    odd = list(range(1, d + 2, 2))
    even = list(range(2, d + 2, 2))[::-1]
    return tuple(odd + even)


def diameter_bound_arc(d: int) -> FlatConvexSet:
    """Flat arc on d + 2 points with gaps (1, 3, 5, ..., d+1, ..., 6, 4, 2)."""
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    return FlatConvexSet.from_gaps(diameter_gaps(d))


def p4k2(k: int) -> FlatConvexSet:
    """
    Two mirrored flat arcs sharing their extreme points, each with gaps
    (1 x k, 2k + 1, 1 x k): 4k + 2 points, width 4k + 1.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    width = 4 * k + 1
    top = list(range(k + 1)) + list(range(3 * k + 1, width + 1))
    bottom = list(range(4 * k, 3 * k, -1)) + list(range(k, 0, -1))
    return FlatConvexSet(top + bottom, [TOP] * len(top) + [BOTTOM] * len(bottom))


# ====================
# Point sets
# ====================

def _decimal_point(x: float, y: float) -> Point:
    return Point.of(f"{x:.6f}", f"{y:.6f}")


def _min_triangle_area(points: List[Point]) -> Fraction:
    best = None
    for p, q, r in combinations(points, 3):
        area = abs((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)) / 2
        if best is None or area < best:
            best = area
    return best


def _accept(points: List[Point]) -> Optional[PointSet]:
    if len(points) >= 3 and _min_triangle_area(points) < MIN_TRIANGLE_AREA:
        return None
    try:
        return PointSet(points)
    except GeneralPositionError:
        return None


def random_general_position(n: int, seed: int) -> PointSet:
    """n points in the unit square drawn from numpy's default_rng(seed), redrawn until well spread."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    rng = np.random.default_rng(seed)
    for draw in range(MAX_DRAWS):
        coords = rng.random((n, 2))
        ps = _accept([_decimal_point(x, y) for x, y in coords])
        if ps is not None:
            if draw:
                logger.debug(f"seed {seed}: accepted draw {draw}")
            return ps
    raise RuntimeError(f"no point set in general position after {MAX_DRAWS} draws")


def random_convex_position(n: int, seed: int) -> PointSet:
    """n points on the unit circle at random angles."""
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    rng = np.random.default_rng(seed)
    for _ in range(MAX_DRAWS):
        angles = np.sort(rng.random(n) * 2 * math.pi)
        ps = _accept([_decimal_point(math.cos(t), math.sin(t)) for t in angles])
        if ps is not None and ps.is_convex_position():
            return ps
    raise RuntimeError(f"no convex point set after {MAX_DRAWS} draws")


def counterexample_9pt(inner_twist: int = 1) -> PointSet:
    """
    Three nested equilateral triangles around the origin. The outer one has
    circumradius 1 with vertices at 90, 210 and 330 degrees, so its bottom
    side is horizontal. The middle one sits on radius 2/3 turned 17 degrees
    counterclockwise off the outer vertex directions, the inner one on radius
    1/3 turned 8.5 degrees, in the same direction when inner_twist is 1 and
    the opposite one when it is -1.
    """
    if inner_twist not in (1, -1):
        raise ValueError(f"inner_twist must be 1 or -1, got {inner_twist}")
    rings = ((1.0, 0.0), (2 / 3, STUCK_ALPHA), (1 / 3, inner_twist * STUCK_ALPHA / 2))
    points = []
    for radius, offset in rings:
        for base in (90.0, 210.0, 330.0):
            t = math.radians(base + offset)
            points.append(_decimal_point(radius * math.cos(t), radius * math.sin(t)))
    return PointSet(points)


# ====================
# Bound reports
# ====================

@dataclass(frozen=True)
class BoundReport:
    construction: str
    params: Dict[str, int]
    optimum: int
    constrained: int
    closed_forms: Dict[str, int] = field(default_factory=dict)
    best_star: Optional[int] = None

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.constrained, self.optimum)


def best_star_length(f: FlatConvexSet) -> int:
    return max(flat_length(star(f, a), f) for a in range(f.n))


def bound_report(construction: str, params: Dict[str, int], cap: int = None) -> BoundReport:
    """Exact optimum and best bounded-diameter tree of a bound construction, in flat units."""
    if construction == 'diambound':
        d = params['d']
        f = diameter_bound_arc(d)
        forms = {'optimum': (d + 1) * (d + 2) * (2 * d + 3) // 6}
    elif construction == 'p4k2':
        k = params['k']
        d = 3
        f = p4k2(k)
        forms = {
            'optimum_at_least': 12 * k * k + 6 * k + 1,
            'diameter3_at_most': 10 * k * k + 6 * k + 1,
            'star_at_most': 8 * k * k + 6 * k + 1,
        }
    else:
        raise ValueError(f"unknown construction {construction!r}")

    optimum = flat_length(longest_plane_tree_convex(f), f)
    constrained = longest_plane_tree_diameter_at_most(f, d, cap=cap).best_length
    logger.debug(f"{construction} {params}: optimum {optimum}, diameter <= {d} best {constrained}")
    return BoundReport(construction=construction, params=dict(params), optimum=optimum,
                       constrained=constrained, closed_forms=forms, best_star=best_star_length(f))
