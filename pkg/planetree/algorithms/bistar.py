# Copyright Cade Stocker 2026
"""
Longest plane bistar for fixed roots, and from it the longest plane tree of
diameter at most three.

A bistar on roots a, b contains ab and attaches every other point to a or b.
The two sides of line ab never interact, so each side is solved on its own.

On one side, measure heights as distance from ab and angles at a (from ray
ab) and at b (from ray ba). Edges ax and by cross exactly when y is beyond x
around a and x is beyond y around b. For a valid pair p, q (ap and bq do not
cross) the region Q(p, q) holds the points lower than both p and q that are
beyond neither ap nor bq. Z(p, q) is the best bistar on Q(p, q): its highest
point k either joins a, forcing every region point beyond ak to a and
leaving Q(k, q), or joins b, forcing every region point beyond bk to b and
leaving Q(p, k).
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, NamedTuple, Optional, Tuple

from planetree.errors import PreconditionError
from planetree.models.geom import PointSet
from planetree.models.spantree import SpanningTree, tree_length

logger = logging.getLogger(__name__)


class ValidPair(NamedTuple):
    p: int
    q: int


class _SideDP:
    """Best bistar on one side of line r1 r2, restricted to trees whose highest point joins r1."""

    def __init__(self, ps: PointSet, r1: int, r2: int, points: Iterable[int]):
        self.ps = ps
        self.r1 = r1
        self.r2 = r2
        pts = list(points)
        self.side = ps.orient(r1, r2, pts[0]) if pts else 1
        heights = {x: self.side * ps.cross(r1, r2, x) for x in pts}
        self.points = sorted(pts, key=lambda x: (-heights[x], x))
        self.rank = {x: i for i, x in enumerate(self.points)}
        self._memo: Dict[Tuple[int, int], Tuple[float, Optional[str], Optional[int]]] = {}

    def w1(self, x):
        return self.ps.edge_length(self.r1, x)

    def w2(self, x):
        return self.ps.edge_length(self.r2, x)

    def beyond1(self, x, p):
        return self.ps.orient(self.r1, p, x) * self.side > 0

    def beyond2(self, x, q):
        return self.ps.orient(self.r2, q, x) * self.side < 0

    def valid(self, p, q):
        return p != q and not (self.beyond1(q, p) and self.beyond2(p, q))

    def region(self, p, q) -> List[int]:
        floor = max(self.rank[p], self.rank[q])
        return [x for x in self.points[floor + 1:] if not self.beyond1(x, p) and not self.beyond2(x, q)]

    def z(self, p, q) -> float:
        key = (p, q)
        if key in self._memo:
            return self._memo[key][0]
        region = self.region(p, q)
        if not region:
            self._memo[key] = (0.0, None, None)
            return 0.0
        k = region[0]
        via_1 = self.w1(k) + sum(self.w1(x) for x in region if self.beyond1(x, k)) + self.z(k, q)
        via_2 = self.w2(k) + sum(self.w2(x) for x in region if self.beyond2(x, k)) + self.z(p, k)
        if via_1 >= via_2:
            self._memo[key] = (via_1, 'r1', k)
        else:
            self._memo[key] = (via_2, 'r2', k)
        return self._memo[key][0]

    def _collect(self, p, q, labels):
        while True:
            self.z(p, q)
            _, choice, k = self._memo[(p, q)]
            if choice is None:
                return
            region = self.region(p, q)
            if choice == 'r1':
                labels[k] = self.r1
                for x in region:
                    if self.beyond1(x, k):
                        labels[x] = self.r1
                p = k
            else:
                labels[k] = self.r2
                for x in region:
                    if self.beyond2(x, k):
                        labels[x] = self.r2
                q = k

    def table(self) -> Dict[ValidPair, float]:
        """Z over every valid pair of this side."""
        return {ValidPair(p, q): self.z(p, q) for p in self.points for q in self.points if self.valid(p, q)}

    def solve(self) -> Tuple[float, Dict[int, int]]:
        pts = self.points
        best_value = sum(self.w1(x) for x in pts)
        best_pair = None
        for i, p in enumerate(pts):
            for j in range(i + 1, len(pts)):
                q = pts[j]
                if not self.valid(p, q):
                    continue
                # every point above q except p must lie beyond ap
                if any(x != p and not self.beyond1(x, p) for x in pts[:j]):
                    continue
                value = (sum(self.w1(x) for x in pts if self.beyond1(x, p))
                         + sum(self.w2(x) for x in pts[j + 1:] if self.beyond2(x, q))
                         + self.w1(p) + self.w2(q) + self.z(p, q))
                if value > best_value:
                    best_value, best_pair = value, (p, q)

        if best_pair is None:
            return best_value, {x: self.r1 for x in pts}
        p, q = best_pair
        labels = {p: self.r1, q: self.r2}
        for x in pts:
            if self.beyond1(x, p):
                labels[x] = self.r1
            elif self.rank[x] > self.rank[q] and self.beyond2(x, q):
                labels[x] = self.r2
        self._collect(p, q, labels)
        return best_value, labels


def solve_side(ps: PointSet, r1: int, r2: int, points: Iterable[int]) -> Tuple[float, Dict[int, int]]:
    """
    Best plane bistar on roots r1, r2 for points that all lie strictly on one
    side of line r1 r2. Returns the length without |r1 r2| and the root each
    point is attached to.
    """
    pts = list(points)
    if not pts:
        return 0.0, {}
    side = ps.orient(r1, r2, pts[0])
    if any(ps.orient(r1, r2, x) != side for x in pts):
        raise PreconditionError("side points must all lie on one side of the root line")
    first = _SideDP(ps, r1, r2, pts).solve()
    second = _SideDP(ps, r2, r1, pts).solve()
    return first if first[0] >= second[0] else second


def bistar_labels(ps: PointSet, a: int, b: int, points: Iterable[int]) -> Tuple[float, Dict[int, int]]:
    """Like solve_side, for points on either side of line ab."""
    above, below = [], []
    for x in points:
        if x in (a, b):
            continue
        (above if ps.orient(a, b, x) > 0 else below).append(x)
    value_above, labels = solve_side(ps, a, b, above)
    value_below, labels_below = solve_side(ps, a, b, below)
    labels.update(labels_below)
    return value_above + value_below, labels


def longest_plane_bistar(ps: PointSet, a: int, b: int) -> SpanningTree:
    if a == b:
        raise ValueError("bistar roots must differ")
    if not (0 <= a < ps.n and 0 <= b < ps.n):
        raise ValueError(f"roots ({a}, {b}) out of range for {ps.n} points")
    _, labels = bistar_labels(ps, a, b, range(ps.n))
    edges = [(a, b)] + [(root, x) for x, root in labels.items()]
    return SpanningTree.trusted(ps.n, edges)


def _pair_tree(args) -> Tuple[SpanningTree, float]:
    ps, a, b = args
    tree = longest_plane_bistar(ps, a, b)
    return tree, tree_length(tree, ps)


def longest_diameter3_tree(ps: PointSet, jobs: int = 1) -> SpanningTree:
    """
    Longest plane tree of hop diameter at most three: the best bistar over all
    root pairs. With jobs > 1 the pairs are spread over a process pool; the
    result does not depend on the worker count.
    """
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    if ps.n < 2:
        return SpanningTree.trusted(ps.n, [])
    pairs = [(ps, a, b) for a in range(ps.n) for b in range(a + 1, ps.n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_pair_tree, pairs))
    else:
        results = [_pair_tree(pair) for pair in pairs]
    best, best_length = None, None
    for tree, length in results:
        if best is None or length > best_length or (length == best_length and tree.edges < best.edges):
            best, best_length = tree, length
    logger.debug(f"best bistar over {len(pairs)} root pairs has length {best_length}")
    return best


def bistar_table(ps: PointSet, a: int, b: int, above: bool = True) -> Dict[ValidPair, float]:
    """Z values of the side of line ab selected by `above`, highest point joining a."""
    pts = [x for x in range(ps.n) if x not in (a, b) and (ps.orient(a, b, x) > 0) == above]
    return _SideDP(ps, a, b, pts).table()
