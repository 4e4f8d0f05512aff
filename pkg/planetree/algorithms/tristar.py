# Copyright Cade Stocker 2026
"""
Longest plane tristar rooted at three convex hull vertices a, b, c.

Every edge of a tristar touches a root, and two of the three root-root edges
are present. With ac and bc present (the other two choices are the same
problem with the roots renamed), the points beyond line ac can only use a
or c and the points beyond line bc only b or c; both are bistar problems.

The remaining points Q lie in the wedge at c. Orders used below, all strict:
x <a y when x comes first rotating around a from c toward b, x <b y rotating
around b from c toward a, and x <c y rotating around c from a toward b.
Within Q, two attachments conflict (their edges cross) exactly when

    x to a, y to c:   x <a y  and  y <c x
    x to b, y to c:   x <b y  and  x <c y
    x to a, y to b:   y <a x  and  x <b y   (both on c's side of ab)
                      x <a y  and  y <b x   (both beyond ab)

Q splits at line ab into U (inside triangle abc) and D (beyond ab). D is
swept from the point farthest from ab; its c-edges cut through the triangle,
so once D is decided the U points left of the leftmost such edge can only use
a or c, those right of the rightmost only b or c, and those in between only
c. When D has no c-edges, U is solved by a sweep from its highest point whose
state is (p, p', r, q', q): p and q bound the points a and b can still reach,
r is the height threshold, and c may only take points strictly between p' and
q' around c. START and END stand for the two ends of the order around c.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Dict, List, NamedTuple, Optional, Tuple

from planetree.algorithms.bistar import bistar_labels
from planetree.errors import HullRootError, PreconditionError
from planetree.models.geom import PointSet
from planetree.models.spantree import SpanningTree, tree_length

logger = logging.getLogger(__name__)

START = 'start'
END = 'end'


class ValidTuple(NamedTuple):
    p: Optional[int]
    p2: object
    r: Optional[int]
    q2: object
    q: Optional[int]


def angular_preceq_c(u: int, v: int, c: int, ps: PointSet) -> bool:
    """
    True iff sweeping counterclockwise around c from the leftward horizontal
    ray meets cu no later than cv.
    """
    for i in (u, v, c):
        if not 0 <= i < ps.n:
            raise ValueError(f"point index {i} out of range for {ps.n} points")
    if u == c or v == c:
        raise ValueError("angular order around c is undefined for c itself")
    if u == v:
        return True
    pc = ps[c]

    def half(p):
        dx, dy = p.x - pc.x, p.y - pc.y
        return 0 if dy < 0 or (dy == 0 and dx < 0) else 1

    hu, hv = half(ps[u]), half(ps[v])
    if hu != hv:
        return hu < hv
    return ps.orient(c, u, v) > 0


class _Middle:
    """The points between ac and bc, for one choice of roots with c in the middle."""

    def __init__(self, ps: PointSet, a: int, b: int, c: int, points: List[int]):
        self.ps = ps
        self.a, self.b, self.c = a, b, c
        self.sa = ps.orient(a, c, b)
        self.sb = ps.orient(b, c, a)
        self.sc = ps.orient(c, a, b)
        side_c = ps.orient(a, b, c)
        height = {x: abs(ps.cross(a, b, x)) for x in points}
        order = sorted(points, key=lambda x: (-height[x], x))
        self.upper = [x for x in order if ps.orient(a, b, x) == side_c]
        self.lower = [x for x in order if ps.orient(a, b, x) != side_c]
        self.rank = {x: i for i, x in enumerate(order)}
        self._memo: Dict[tuple, Tuple[float, int]] = {}
        self._bs: Dict[tuple, Tuple[float, Dict[int, int]]] = {}

    # ---- orders ----

    def lt_a(self, x, y):
        return x != y and self.ps.orient(self.a, x, y) == self.sa

    def lt_b(self, x, y):
        return x != y and self.ps.orient(self.b, x, y) == self.sb

    def lt_c(self, x, y):
        if x == y:
            return False
        if x == START or y == END:
            return True
        if x == END or y == START:
            return False
        return self.ps.orient(self.c, x, y) == self.sc

    def w(self, root, x):
        return self.ps.edge_length(root, x)

    def bs(self, z, pts) -> Tuple[float, Dict[int, int]]:
        key = (z, frozenset(pts))
        if key not in self._bs:
            self._bs[key] = bistar_labels(self.ps, z, self.c, pts) if pts else (0.0, {})
        return self._bs[key]

    def below(self, x, bound):
        return bound is None or self.rank[x] > self.rank[bound]

    # ---- sweep over U ----

    def u_region(self, s: ValidTuple) -> List[int]:
        return [x for x in self.upper
                if self.below(x, s.p) and self.below(x, s.q) and self.below(x, s.r)
                and (s.p is None or self.lt_a(s.p, x))
                and (s.q is None or self.lt_b(s.q, x))]

    def u_options(self, s: ValidTuple):
        region = self.u_region(s)
        if not region:
            return [(0.0, {}, None)]
        a, b, c = self.a, self.b, self.c
        k = region[0]
        rest = region[1:]
        options = []

        if s.p2 != START and self.lt_c(k, s.p2):
            forced = [t for t in rest if self.lt_a(t, k)]
            labels = {t: a for t in forced}
            labels[k] = a
            value = self.w(a, k) + sum(self.w(a, t) for t in forced)
            options.append((value, labels, ('U', ValidTuple(k, s.p2, s.r, s.q2, s.q))))

            flatter = [t for t in rest if self.lt_b(k, t)]
            steeper = [t for t in rest if self.lt_b(t, k)]
            blocked = [t for t in steeper if self.lt_c(k, t) and self.lt_c(t, s.p2)]
            g = next((t for t in blocked if not any(self.lt_b(o, t) for o in blocked)), None)
            free = [t for t in steeper if self.lt_c(s.p2, t) and self.lt_c(t, s.q2)
                    and (g is None or self.lt_b(t, g))]
            v1, l1 = self.bs_ab(flatter)
            v2, l2 = self.bs(b, free)
            labels = dict(l1)
            labels.update(l2)
            labels[k] = b
            for t in steeper:
                if t not in free:
                    labels[t] = b
            value = self.w(b, k) + v1 + v2 + sum(self.w(b, t) for t in steeper if t not in free)
            options.append((value, labels, None))

        elif s.q2 != END and self.lt_c(s.q2, k):
            forced = [t for t in rest if self.lt_b(t, k)]
            labels = {t: b for t in forced}
            labels[k] = b
            value = self.w(b, k) + sum(self.w(b, t) for t in forced)
            options.append((value, labels, ('U', ValidTuple(s.p, s.p2, s.r, s.q2, k))))

            flatter = [t for t in rest if self.lt_a(k, t)]
            steeper = [t for t in rest if self.lt_a(t, k)]
            blocked = [t for t in steeper if self.lt_c(s.q2, t) and self.lt_c(t, k)]
            g = next((t for t in blocked if not any(self.lt_a(o, t) for o in blocked)), None)
            free = [t for t in steeper if self.lt_c(s.p2, t) and self.lt_c(t, s.q2)
                    and (g is None or self.lt_a(t, g))]
            v1, l1 = self.bs_ab(flatter)
            v2, l2 = self.bs(a, free)
            labels = dict(l1)
            labels.update(l2)
            labels[k] = a
            for t in steeper:
                if t not in free:
                    labels[t] = a
            value = self.w(a, k) + v1 + v2 + sum(self.w(a, t) for t in steeper if t not in free)
            options.append((value, labels, None))

        else:
            options.append((self.w(c, k), {k: c}, ('U', ValidTuple(s.p, s.p2, k, s.q2, s.q))))

            steeper = [t for t in rest if self.lt_a(t, k)]
            forced = [t for t in steeper if self.lt_c(t, s.p2)]
            v1, l1 = self.bs(a, [t for t in steeper if t not in forced])
            labels = dict(l1)
            labels.update({t: a for t in forced})
            labels[k] = a
            value = self.w(a, k) + v1 + sum(self.w(a, t) for t in forced)
            options.append((value, labels, ('U', ValidTuple(k, k, k, s.q2, s.q))))

            steeper = [t for t in rest if self.lt_b(t, k)]
            forced = [t for t in steeper if self.lt_c(s.q2, t)]
            v2, l2 = self.bs(b, [t for t in steeper if t not in forced])
            labels = dict(l2)
            labels.update({t: b for t in forced})
            labels[k] = b
            value = self.w(b, k) + v2 + sum(self.w(b, t) for t in forced)
            options.append((value, labels, ('U', ValidTuple(s.p, s.p2, k, k, k))))
        return options

    def bs_ab(self, pts) -> Tuple[float, Dict[int, int]]:
        key = ('ab', frozenset(pts))
        if key not in self._bs:
            self._bs[key] = bistar_labels(self.ps, self.a, self.b, pts) if pts else (0.0, {})
        return self._bs[key]

    # ---- sweep over D ----

    def d_options(self, s):
        p, q, wl, wr, r = s
        a, b, c = self.a, self.b, self.c
        region = [x for x in self.lower
                  if self.below(x, p) and self.below(x, q) and self.below(x, r)
                  and (p is None or self.lt_a(x, p))
                  and (q is None or self.lt_b(x, q))]
        if not region:
            if wl is None:
                return [(0.0, {}, ('U', ValidTuple(None, START, None, END, None)))]
            left = [u for u in self.upper if self.lt_c(u, wl)]
            right = [u for u in self.upper if self.lt_c(wr, u)]
            middle = [u for u in self.upper if self.lt_c(wl, u) and self.lt_c(u, wr)]
            v1, l1 = self.bs(a, left)
            v2, l2 = self.bs(b, right)
            labels = dict(l1)
            labels.update(l2)
            labels.update({u: c for u in middle})
            return [(v1 + v2 + sum(self.w(c, u) for u in middle), labels, None)]

        k = region[0]
        rest = region[1:]
        new_wl = k if wl is None or self.lt_c(k, wl) else wl
        new_wr = k if wr is None or self.lt_c(wr, k) else wr
        options = [(self.w(c, k), {k: c}, ('D', (p, q, new_wl, new_wr, k)))]
        if wl is None or self.lt_c(k, wl):
            forced = [t for t in rest if self.lt_a(k, t)]
            labels = {t: a for t in forced}
            labels[k] = a
            value = self.w(a, k) + sum(self.w(a, t) for t in forced)
            options.append((value, labels, ('D', (k, q, wl, wr, k))))
        if wr is None or self.lt_c(wr, k):
            forced = [t for t in rest if self.lt_b(k, t)]
            labels = {t: b for t in forced}
            labels[k] = b
            value = self.w(b, k) + sum(self.w(b, t) for t in forced)
            options.append((value, labels, ('D', (p, k, wl, wr, k))))
        return options

    # ---- shared driver ----

    def _options(self, node):
        kind, state = node
        return self.u_options(state) if kind == 'U' else self.d_options(state)

    def value(self, node) -> float:
        if node in self._memo:
            return self._memo[node][0]
        best, best_i = None, 0
        for i, (local, _, nxt) in enumerate(self._options(node)):
            total = local + (self.value(nxt) if nxt is not None else 0.0)
            if best is None or total > best:
                best, best_i = total, i
        self._memo[node] = (best, best_i)
        return best

    def solve(self) -> Tuple[float, Dict[int, int]]:
        node = ('D', (None, None, None, None, None))
        total = self.value(node)
        labels = {}
        while node is not None:
            self.value(node)
            _, local_labels, nxt = self._options(node)[self._memo[node][1]]
            labels.update(local_labels)
            node = nxt
        return total, labels


def _configuration(ps: PointSet, a: int, b: int, c: int) -> Tuple[float, List[Tuple[int, int]]]:
    """Best tristar containing ac and bc, as (length, edges)."""
    others = [x for x in range(ps.n) if x not in (a, b, c)]
    beyond_ac = [x for x in others if ps.orient(a, c, x) != ps.orient(a, c, b)]
    beyond_bc = [x for x in others if ps.orient(b, c, x) != ps.orient(b, c, a) and x not in beyond_ac]
    middle = [x for x in others if x not in beyond_ac and x not in beyond_bc]

    v1, l1 = bistar_labels(ps, a, c, beyond_ac)
    v2, l2 = bistar_labels(ps, b, c, beyond_bc)
    v3, l3 = _Middle(ps, a, b, c, middle).solve()
    labels = {**l1, **l2, **l3}
    edges = [(a, c), (b, c)] + [(root, x) for x, root in labels.items()]
    total = ps.edge_length(a, c) + ps.edge_length(b, c) + v1 + v2 + v3
    return total, edges


def longest_plane_tristar(ps: PointSet, a: int, b: int, c: int) -> SpanningTree:
    """Longest plane tree whose edges all touch a, b or c; the roots must be hull vertices."""
    if ps.n < 3:
        raise PreconditionError(f"a tristar needs at least 3 points, got {ps.n}")
    if len({a, b, c}) != 3:
        raise ValueError("tristar roots must be distinct")
    hull = set(ps.hull())
    outside = [r for r in (a, b, c) if r not in hull]
    if outside:
        raise HullRootError(f"roots {outside} are not convex hull vertices")

    best, best_length = None, None
    for x, y, m in ((a, b, c), (b, c, a), (c, a, b)):
        _, edges = _configuration(ps, x, y, m)
        tree = SpanningTree.trusted(ps.n, edges)
        length = tree_length(tree, ps)
        if best is None or length > best_length or (length == best_length and tree.edges < best.edges):
            best, best_length = tree, length
    return best


def _triple_tree(args) -> Tuple[SpanningTree, float]:
    ps, a, b, c = args
    tree = longest_plane_tristar(ps, a, b, c)
    return tree, tree_length(tree, ps)


def best_tristar_over_hull_triples(ps: PointSet, jobs: int = 1) -> SpanningTree:
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    hull = sorted(ps.hull()) if ps.n >= 3 else []
    if len(hull) < 3:
        raise PreconditionError("the convex hull needs at least 3 vertices")
    triples = [(ps, a, b, c) for a, b, c in combinations(hull, 3)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_triple_tree, triples))
    else:
        results = [_triple_tree(triple) for triple in triples]
    best, best_length = None, None
    for tree, length in results:
        if best is None or length > best_length or (length == best_length and tree.edges < best.edges):
            best, best_length = tree, length
    logger.debug(f"best tristar over {len(hull)} hull vertices has length {best_length}")
    return best
