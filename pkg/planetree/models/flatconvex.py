# Copyright Cade Stocker 2026
"""
Flat convex point sets in exact integer arithmetic.

A flat set has negligible y-coordinates, so an edge's length is just the
difference of its endpoints' x-coordinates. Two shapes are supported:

    arc   - every point on one arc, x strictly increasing
    twin  - a top arc left to right (including both extreme points) followed
            by a bottom arc right to left over interior x values only

Point i sits at position i of the cyclic convex order in both shapes, which is
all the crossing test needs. `realize` turns a flat set into an actual PointSet
when a geometric algorithm has to run on it.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from planetree.errors import GeneralPositionError, PreconditionError
from planetree.models.geom import Point, PointSet
from planetree.models.spantree import SpanningTree

logger = logging.getLogger(__name__)

TOP = 'top'
BOTTOM = 'bottom'

# extra per-point scalings tried when a realization is not in general position
REALIZE_ATTEMPTS = 8


@dataclass(frozen=True)
class GapSequence:
    gaps: Tuple[int, ...]

    def __post_init__(self):
        if any(g < 1 for g in self.gaps):
            raise ValueError(f"gaps must be positive, got {self.gaps}")

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self):
        return len(self.gaps)


@dataclass(frozen=True)
class CoverSequence:
    covers: Tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.covers):
            raise ValueError(f"covers must be nonnegative, got {self.covers}")

    def __iter__(self):
        return iter(self.covers)

    def __len__(self):
        return len(self.covers)


class FlatConvexSet:
    exact = True

    def __init__(self, xs: Sequence[int], sides: Optional[Sequence[str]] = None):
        self.xs: Tuple[int, ...] = tuple(int(x) for x in xs)
        if sides is None:
            sides = [TOP] * len(self.xs)
        self.sides: Tuple[str, ...] = tuple(sides)
        self._validate()

    def _validate(self):
        xs, sides = self.xs, self.sides
        if len(xs) < 2:
            raise ValueError(f"a flat set needs at least 2 points, got {len(xs)}")
        if len(sides) != len(xs):
            raise ValueError("one side tag is needed per point")
        for s in sides:
            if s not in (TOP, BOTTOM):
                raise ValueError(f"side must be '{TOP}' or '{BOTTOM}', got {s!r}")
        n_top = 0
        while n_top < len(sides) and sides[n_top] == TOP:
            n_top += 1
        if any(s == TOP for s in sides[n_top:]):
            raise ValueError("top points must all come before bottom points")
        if n_top < 2:
            raise ValueError("the top arc needs both extreme points")
        top = xs[:n_top]
        if any(b <= a for a, b in zip(top, top[1:])):
            raise ValueError(f"top arc x-coordinates must strictly increase, got {top}")
        bottom = xs[n_top:]
        if any(b >= a for a, b in zip(bottom, bottom[1:])):
            raise ValueError(f"bottom arc x-coordinates must strictly decrease, got {bottom}")
        if bottom and not (top[0] < bottom[-1] and bottom[0] < top[-1]):
            raise ValueError("bottom arc must lie strictly between the two extreme points")

    @classmethod
    def from_gaps(cls, gaps: Sequence[int], start: int = 0) -> 'FlatConvexSet':
        xs = [start]
        for g in gaps:
            xs.append(xs[-1] + int(g))
        return cls(xs)

    def __len__(self):
        return len(self.xs)

    def __eq__(self, other):
        return isinstance(other, FlatConvexSet) and self.xs == other.xs and self.sides == other.sides

    def __hash__(self):
        return hash((self.xs, self.sides))

    def __repr__(self):
        return f"FlatConvexSet({self.kind}, xs={list(self.xs)})"

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def kind(self) -> str:
        return 'arc' if all(s == TOP for s in self.sides) else 'twin'

    @property
    def width(self) -> int:
        return max(self.xs) - min(self.xs)

    def edge_length(self, i: int, j: int) -> int:
        return abs(self.xs[i] - self.xs[j])

    def crosses(self, e1, e2) -> bool:
        return chords_cross(e1, e2, self)

    def convex_order(self) -> List[int]:
        return list(range(self.n))


def chords_cross(e1, e2, f: FlatConvexSet = None) -> bool:
    """True iff the endpoints strictly interleave in the cyclic order; shared endpoints never cross."""
    a, b = sorted(e1)
    c, d = sorted(e2)
    if a in (c, d) or b in (c, d):
        return False
    return (a < c < b) != (a < d < b)


def _require_arc(f: FlatConvexSet):
    if f.kind != 'arc':
        raise PreconditionError("gap and cover sequences are defined for single arcs only")


def gap_sequence(f: FlatConvexSet) -> GapSequence:
    _require_arc(f)
    return GapSequence(tuple(b - a for a, b in zip(f.xs, f.xs[1:])))


def cover_sequence(t: SpanningTree, f: FlatConvexSet) -> CoverSequence:
    """c_i counts the edges spanning the gap between points i and i+1."""
    _require_arc(f)
    covers = [0] * (f.n - 1)
    for u, v in t.edges:
        for i in range(u, v):
            covers[i] += 1
    return CoverSequence(tuple(covers))


def flat_length(t: SpanningTree, f: FlatConvexSet) -> int:
    return sum(abs(f.xs[u] - f.xs[v]) for u, v in t.edges)


def _bump(x: int, x0: int, width: int) -> Fraction:
    rel = x - x0
    return Fraction(rel * (width - rel), width * width)


def realize(f: FlatConvexSet, eps: float = 1e-6) -> PointSet:
    """
    Embed at (x, +-eps * h(x)) with h a concave bump vanishing at the extreme
    points, top arc up and bottom arc down. Heights are exact Fractions; if the
    result is not in general position the heights get distinct per-point
    factors 1, 1 + d, 1 + 2d, ... and the embedding is retried.
    """
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")
    scale = Fraction(str(eps))
    x0 = min(f.xs)
    width = f.width
    last_error = None
    for attempt in range(REALIZE_ATTEMPTS):
        step = Fraction(attempt, 8 * f.n * width * width)
        points = []
        for i, (x, side) in enumerate(zip(f.xs, f.sides)):
            y = scale * _bump(x, x0, width) * (1 + i * step)
            points.append(Point(Fraction(x), y if side == TOP else -y))
        try:
            return PointSet(points)
        except GeneralPositionError as e:
            logger.debug(f"realization attempt {attempt} degenerate: {e}")
            last_error = e
    raise last_error
