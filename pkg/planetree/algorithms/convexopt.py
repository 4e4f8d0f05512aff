# Copyright Cade Stocker 2026
"""
Convex position: the exact interval DP, caterpillar shapes and the
zigzag drawings that realize them on a flat arc.

Works on any instance with a convex order, i.e. a PointSet in convex position
or a FlatConvexSet.
"""

import logging
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from planetree.errors import NotCaterpillarError, NotPlaneError
from planetree.models.flatconvex import CoverSequence, FlatConvexSet, cover_sequence
from planetree.models.spantree import SpanningTree, dual_graph, is_caterpillar, is_plane, tree_length

logger = logging.getLogger(__name__)

CaterpillarForm = Tuple[int, ...]


# ====================
# Interval DP
# ====================

class _IntervalDP:
    """
    Over positions i..j of the convex order:

        T(i, j)  best plane tree spanning i..j
        A(i, m)  best plane tree spanning i..m that contains chord (i, m)

    In T(i, j) let m be the farthest neighbour of i; chord (i, m) shields
    m..j, which hangs off m. In A(i, m) dropping the chord leaves a tree on
    i..k holding i and one on k+1..m holding m.
    """

    def __init__(self, instance):
        self.instance = instance
        self.order = list(instance.convex_order())
        self._t: Dict[Tuple[int, int], Tuple[float, int]] = {}
        self._a: Dict[Tuple[int, int], Tuple[float, int]] = {}

    def w(self, i, j):
        return self.instance.edge_length(self.order[i], self.order[j])

    def t(self, i, j):
        if i == j:
            return 0
        if (i, j) not in self._t:
            best = None
            for m in range(i + 1, j + 1):
                value = self.a(i, m) + self.t(m, j)
                if best is None or value > best[0]:
                    best = (value, m)
            self._t[(i, j)] = best
        return self._t[(i, j)][0]

    def a(self, i, m):
        if (i, m) not in self._a:
            best = None
            for k in range(i, m):
                value = self.t(i, k) + self.t(k + 1, m)
                if best is None or value > best[0]:
                    best = (value, k)
            self._a[(i, m)] = (self.w(i, m) + best[0], best[1])
        return self._a[(i, m)][0]

    def edges(self, i, j, out: List[Tuple[int, int]]):
        stack = [('t', i, j)]
        while stack:
            kind, i, j = stack.pop()
            if kind == 't':
                if i == j:
                    continue
                self.t(i, j)
                m = self._t[(i, j)][1]
                stack.append(('a', i, m))
                stack.append(('t', m, j))
            else:
                self.a(i, j)
                k = self._a[(i, j)][1]
                out.append((self.order[i], self.order[j]))
                stack.append(('t', i, k))
                stack.append(('t', k + 1, j))


def longest_plane_tree_convex(instance) -> SpanningTree:
    """Exact longest plane tree for points in convex position, O(n^3)."""
    dp = _IntervalDP(instance)
    n = len(dp.order)
    edges: List[Tuple[int, int]] = []
    if n > 1:
        dp.t(0, n - 1)
        dp.edges(0, n - 1, edges)
    logger.debug(f"convex DP filled {len(dp._t) + len(dp._a)} intervals for {n} points")
    return SpanningTree.trusted(instance.n, edges)


def quadrilateral_exchange(t: SpanningTree, instance) -> Optional[SpanningTree]:
    """
    For a plane convex tree whose dual has a node of degree 3 or more, take
    three consecutive edges ab, bc, cd bounding that face; since
    |ab| + |cd| < |ac| + |bd|, swapping ab for ac or cd for bd lengthens the
    tree. Returns the longer tree, or None when the dual is a path or no
    exchange is strictly longer.
    """
    if not is_plane(t, instance):
        raise NotPlaneError("the exchange needs a plane tree")
    dual = dual_graph(t, instance)
    order = list(instance.convex_order())
    n = len(order)
    graph = t.to_graph()
    base = tree_length(t, instance)
    best, best_length = None, base
    for face, degree in sorted(dual.degree()):
        if degree < 3:
            continue
        path = nx.shortest_path(graph, order[(face + 1) % n], order[face])
        for i in range(len(path) - 3):
            a, b, c, d = path[i:i + 4]
            for removed, added in (((a, b), (a, c)), ((c, d), (b, d))):
                edges = [e for e in t.edges if set(e) != set(removed)] + [added]
                candidate = SpanningTree.trusted(t.n, edges)
                length = tree_length(candidate, instance)
                if length > best_length and is_plane(candidate, instance):
                    best, best_length = candidate, length
        if best is not None:
            return best
    return None


# ====================
# Caterpillars
# ====================

def _spine(t: SpanningTree) -> List[int]:
    """Non-leaf vertices in path order; for a single edge, one endpoint."""
    if t.n <= 2:
        return [0]
    graph = t.to_graph()
    inner = [v for v in graph if graph.degree(v) > 1]
    spine = graph.subgraph(inner)
    if len(inner) == 1:
        return inner
    ends = sorted(v for v in spine if spine.degree(v) == 1)
    return nx.shortest_path(spine, ends[0], ends[1])


def _require_caterpillar(t: SpanningTree):
    if not is_caterpillar(t):
        raise NotCaterpillarError("tree is not a caterpillar")


def caterpillar_canonical_form(t: SpanningTree) -> CaterpillarForm:
    """Leaf counts along the spine, the smaller of the sequence and its reversal."""
    _require_caterpillar(t)
    if t.n == 1:
        return (0,)
    if t.n == 2:
        return (1,)
    deg = t.degrees()
    adj = t.adjacency()
    counts = tuple(sum(1 for u in adj[v] if deg[u] == 1) for v in _spine(t))
    return min(counts, counts[::-1])


def caterpillar_from_form(form: Sequence[int]) -> SpanningTree:
    """Spine vertices 0..k-1, then each spine vertex's leaves in turn."""
    form = tuple(form)
    if not form or any(c < 0 for c in form):
        raise ValueError(f"invalid caterpillar form {form}")
    k = len(form)
    if k > 1 and (form[0] < 1 or form[-1] < 1):
        raise ValueError("both ends of a spine need at least one leaf")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, count in enumerate(form):
        for _ in range(count):
            edges.append((i, nxt))
            nxt += 1
    return SpanningTree.trusted(nxt, edges)


def enumerate_caterpillars(max_edges: int) -> Iterator[CaterpillarForm]:
    """Every caterpillar with 1..max_edges edges once, as canonical forms, by edge count."""
    for edges in range(1, max_edges + 1):
        yield (edges,)
        for k in range(2, edges):
            leaves = edges - (k - 1)
            for form in _compositions(leaves, k):
                if form[0] >= 1 and form[-1] >= 1 and form <= form[::-1]:
                    yield form


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def zigzag_embedding(cat: SpanningTree, m_plus_1: int = None) -> SpanningTree:
    """
    Draw a caterpillar on arc positions 0..m so that it contains {0, m} and
    its dual is a path. The spine, extended by one leaf at each end, is laid
    out alternately from the left and right ends of the arc. A spine vertex's
    remaining leaves go on the opposite side, just before the next path
    vertex there, so each of its edges nests inside the previous one.
    """
    _require_caterpillar(cat)
    n = cat.n
    if m_plus_1 is not None and m_plus_1 != n:
        raise ValueError(f"caterpillar has {n} vertices, not {m_plus_1}")
    if n == 1:
        return SpanningTree.trusted(1, [])

    adj = cat.adjacency()
    deg = cat.degrees()
    spine = _spine(cat)
    if len(spine) == 1:
        # fan at position 0
        return SpanningTree.trusted(n, [(0, i) for i in range(1, n)])

    leaves = {v: sorted(u for u in adj[v] if deg[u] == 1) for v in spine}
    path = [leaves[spine[0]].pop(0)] + spine + [leaves[spine[-1]].pop(0)]
    leaves[path[0]] = []
    leaves[path[-1]] = []

    pos = {}
    left, right = 0, n - 1
    for i, v in enumerate(path):
        if i % 2 == 0:
            pos[v] = left
            left += 1
            for u in leaves[v]:
                pos[u] = right
                right -= 1
        else:
            pos[v] = right
            right -= 1
            for u in leaves[v]:
                pos[u] = left
                left += 1
    return cat.relabel(pos)


def caterpillar_to_flat_arc(cat: SpanningTree) -> FlatConvexSet:
    """Flat arc whose gaps are the covers of the zigzag drawing of `cat`."""
    _require_caterpillar(cat)
    if cat.n < 2:
        raise ValueError("a flat arc needs at least 2 points")
    drawing = zigzag_embedding(cat)
    covers = cover_sequence(drawing, FlatConvexSet(range(cat.n)))
    return FlatConvexSet.from_gaps(covers.covers)


def is_unimodal_permutation(s) -> bool:
    values = list(s.covers if isinstance(s, CoverSequence) else s)
    if sorted(values) != list(range(1, len(values) + 1)):
        return False
    peak = values.index(max(values)) if values else 0
    rising = all(a < b for a, b in zip(values[:peak], values[1:peak + 1]))
    falling = all(a > b for a, b in zip(values[peak:], values[peak + 1:]))
    return rising and falling
