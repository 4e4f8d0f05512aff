# Copyright Cade Stocker 2026
"""
Planar geometry primitives with exact predicates.

Coordinates are kept as Fractions so every orientation sign is exact for the
inputs the generators write (integers and short decimals). A PointSet scales
all coordinates onto a common integer grid once, so the predicates used in the
inner loops of the algorithms are plain integer arithmetic.

Lengths, on the other hand, are floats: they come from a numpy distance matrix
built when the PointSet is created.
"""

import math
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Tuple, Union

import numpy as np

from planetree.errors import GeneralPositionError, NotConvexError, PreconditionError

Number = Union[int, float, str, Fraction, Decimal]


def _to_fraction(value: Number) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"coordinate must be finite, got {value!r}")
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"coordinate must be finite, got {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.lower() in ('nan', '+nan', '-nan', 'inf', '+inf', '-inf', 'infinity', '+infinity', '-infinity'):
            raise ValueError(f"coordinate must be finite, got {value!r}")
        return Fraction(text)
    raise TypeError(f"unsupported coordinate type {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: Number, y: Number) -> 'Point':
        """Build a point from ints, floats, decimal strings or Fractions."""
        return cls(_to_fraction(x), _to_fraction(y))

    def __iter__(self):
        yield self.x
        yield self.y

    def as_floats(self) -> Tuple[float, float]:
        return float(self.x), float(self.y)


@dataclass(frozen=True)
class Segment:
    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError(f"segment endpoints must differ, got ({self.a}, {self.b})")

    @property
    def key(self) -> Tuple[int, int]:
        return (self.a, self.b) if self.a < self.b else (self.b, self.a)


def orientation(p: Point, q: Point, r: Point) -> int:
    """+1 if r is strictly left of the directed line pq, -1 if strictly right, 0 if collinear."""
    det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (det > 0) - (det < 0)


@dataclass(frozen=True)
class GeneralPositionReport:
    """
    Outcome of a general position check. Truthy when the points are fine;
    otherwise `kind` is 'duplicate' or 'collinear' and `indices` names the first
    offending pair or triple in lexicographic order.
    """
    ok: bool
    kind: Optional[str] = None
    indices: Tuple[int, ...] = ()

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "general position ok"
        return f"{self.kind} points {self.indices}"


def _coerce_points(points) -> List[Point]:
    if isinstance(points, PointSet):
        return list(points.points)
    out = []
    for p in points:
        out.append(p if isinstance(p, Point) else Point.of(*p))
    return out


def validate_general_position(points) -> GeneralPositionReport:
    """
    Check a PointSet or a plain sequence of points (Point or (x, y) pairs).
    Duplicates are reported before collinear triples.
    """
    pts = _coerce_points(points)
    seen = {}
    for j, p in enumerate(pts):
        if p in seen:
            return GeneralPositionReport(False, 'duplicate', (seen[p], j))
        seen[p] = j
    for i, j, k in combinations(range(len(pts)), 3):
        if orientation(pts[i], pts[j], pts[k]) == 0:
            return GeneralPositionReport(False, 'collinear', (i, j, k))
    return GeneralPositionReport(True)


class PointSet:
    """
    An ordered planar point set in general position. Indices 0..n-1 are the
    point identifiers every algorithm works with.

    Construction raises GeneralPositionError on duplicates or collinear triples.
    """

    exact = False

    def __init__(self, points: Iterable):
        self.points: Tuple[Point, ...] = tuple(_coerce_points(points))
        report = validate_general_position(self.points)
        if not report:
            raise GeneralPositionError(report)

        # common integer grid for the predicates
        scale = 1
        for p in self.points:
            scale = math.lcm(scale, p.x.denominator, p.y.denominator)
        self._ix = [int(p.x * scale) for p in self.points]
        self._iy = [int(p.y * scale) for p in self.points]

        xs = np.array([float(p.x) for p in self.points], dtype=float)
        ys = np.array([float(p.y) for p in self.points], dtype=float)
        self._dist = np.hypot(xs[:, None] - xs[None, :], ys[:, None] - ys[None, :]).tolist()
        self._hull: Optional[List[int]] = None

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet(n={self.n})"

    @property
    def n(self) -> int:
        return len(self.points)

    def _check(self, *indices):
        for i in indices:
            if not 0 <= i < self.n:
                raise ValueError(f"point index {i} out of range for {self.n} points")

    def orient(self, i: int, j: int, k: int) -> int:
        """Exact orientation of point k relative to the directed line i -> j."""
        ix, iy = self._ix, self._iy
        det = (ix[j] - ix[i]) * (iy[k] - iy[i]) - (iy[j] - iy[i]) * (ix[k] - ix[i])
        return (det > 0) - (det < 0)

    def cross(self, i: int, j: int, k: int) -> int:
        """Twice the signed area of triangle (i, j, k) on the integer grid."""
        ix, iy = self._ix, self._iy
        return (ix[j] - ix[i]) * (iy[k] - iy[i]) - (iy[j] - iy[i]) * (ix[k] - ix[i])

    def squared_distance(self, i: int, j: int) -> int:
        """Exact squared distance on the integer grid (only comparable within one set)."""
        dx = self._ix[i] - self._ix[j]
        dy = self._iy[i] - self._iy[j]
        return dx * dx + dy * dy

    def edge_length(self, i: int, j: int) -> float:
        return self._dist[i][j]

    def crosses(self, e1, e2) -> bool:
        a, b = e1
        c, d = e2
        if a in (c, d) or b in (c, d):
            return False
        return (self.orient(a, b, c) * self.orient(a, b, d) < 0
                and self.orient(c, d, a) * self.orient(c, d, b) < 0)

    def hull(self) -> List[int]:
        if self._hull is None:
            self._hull = _monotone_chain(self)
        return list(self._hull)

    def is_convex_position(self) -> bool:
        return self.n < 3 or len(self.hull()) == self.n

    def convex_order(self) -> List[int]:
        """Indices in counterclockwise hull order; the set must be in convex position."""
        if self.n < 3:
            return list(range(self.n))
        order = self.hull()
        if len(order) != self.n:
            inside = sorted(set(range(self.n)) - set(order))
            raise NotConvexError(f"points {inside} are not on the convex hull")
        return order


def _monotone_chain(ps: PointSet) -> List[int]:
    idx = sorted(range(ps.n), key=lambda i: (ps[i].x, ps[i].y))

    def half(seq):
        chain = []
        for i in seq:
            while len(chain) >= 2 and ps.orient(chain[-2], chain[-1], i) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def segments_cross(s1, s2, ps: PointSet) -> bool:
    """
    True iff the open segments intersect. Segments may be Segment objects or
    index pairs; segments sharing an endpoint never cross.
    """
    e1 = (s1.a, s1.b) if isinstance(s1, Segment) else tuple(s1)
    e2 = (s2.a, s2.b) if isinstance(s2, Segment) else tuple(s2)
    ps._check(*e1, *e2)
    return ps.crosses(e1, e2)


def convex_hull(ps: PointSet) -> List[int]:
    """Hull vertices in counterclockwise order starting from the leftmost (lowest) point."""
    if ps.n < 3:
        raise PreconditionError(f"convex hull needs at least 3 points, got {ps.n}")
    return ps.hull()
