# Copyright Cade Stocker 2026
"""
Spanning trees over an indexed point collection and the structural checks run on them.

A tree only knows n and its edges. Anything metric (length, planarity, the
dual of a convex drawing) is asked of an "instance": either a PointSet or a
FlatConvexSet. Both provide `n`, `edge_length(i, j)`, `crosses(e1, e2)`,
`convex_order()` and an `exact` flag (flat sets measure in exact integers).
"""

import math
from collections import deque
from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

import networkx as nx

from planetree.errors import InvalidTreeError, NotPlaneError

Edge = Tuple[int, int]


def canonical_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SpanningTree:
    """
    n - 1 edges over points 0..n-1, stored sorted with the smaller index first
    so that equality and hashing are structural.
    """
    n: int
    edges: Tuple[Edge, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> 'SpanningTree':
        """Validate and canonicalize. Raises InvalidTreeError if the edges are not a spanning tree."""
        if n < 1:
            raise InvalidTreeError(f"a tree needs at least one point, got n={n}")
        canon = []
        for e in edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InvalidTreeError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidTreeError(f"edge ({u}, {v}) out of range for {n} points")
            canon.append(canonical_edge(u, v))
        canon.sort()
        if len(set(canon)) != len(canon):
            raise InvalidTreeError("duplicate edge")
        if len(canon) != n - 1:
            raise InvalidTreeError(f"expected {n - 1} edges, got {len(canon)}")
        graph = nx.Graph()
        graph.add_nodes_from(range(n))
        graph.add_edges_from(canon)
        if not nx.is_tree(graph):
            raise InvalidTreeError("edges contain a cycle or leave the points disconnected")
        return cls(n, tuple(canon))

    @classmethod
    def trusted(cls, n: int, edges: Iterable[Edge]) -> 'SpanningTree':
        # callers guarantee a valid tree; only canonicalizes
        return cls(n, tuple(sorted(canonical_edge(u, v) for u, v in edges)))

    def __iter__(self):
        return iter(self.edges)

    def __len__(self):
        return len(self.edges)

    def adjacency(self) -> Dict[int, List[int]]:
        adj = {v: [] for v in range(self.n)}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degrees(self) -> List[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def to_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges)
        return graph

    def relabel(self, mapping) -> 'SpanningTree':
        """Tree with every index i replaced by mapping[i]."""
        return SpanningTree.trusted(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))


@dataclass(frozen=True)
class TreeMetrics:
    length: float
    hop_diameter: int
    plane: bool


def _check_size(t: SpanningTree, instance):
    if t.n != instance.n:
        raise InvalidTreeError(f"tree spans {t.n} points but the instance has {instance.n}")


def tree_length(t: SpanningTree, instance):
    """Sum of edge lengths: an exact int on flat instances, an fsum float otherwise."""
    _check_size(t, instance)
    if instance.exact:
        return sum(instance.edge_length(u, v) for u, v in t.edges)
    return math.fsum(instance.edge_length(u, v) for u, v in t.edges)


def is_plane(t: SpanningTree, instance) -> bool:
    _check_size(t, instance)
    edges = t.edges
    for i in range(len(edges)):
        for j in range(i + 1, len(edges)):
            if instance.crosses(edges[i], edges[j]):
                return False
    return True


def _farthest(adj: Dict[int, List[int]], start: int) -> Tuple[int, int]:
    dist = {start: 0}
    queue = deque([start])
    last = start
    while queue:
        v = queue.popleft()
        last = v
        for w in adj[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                queue.append(w)
    return last, dist[last]


def hop_diameter(t: SpanningTree) -> int:
    """Edges on the longest simple path, by two BFS sweeps."""
    if t.n == 1:
        return 0
    adj = t.adjacency()
    far, _ = _farthest(adj, 0)
    _, diameter = _farthest(adj, far)
    return diameter


def is_caterpillar(t: SpanningTree) -> bool:
    """True iff deleting every leaf leaves a (possibly empty) path."""
    if t.n <= 3:
        return True
    graph = t.to_graph()
    leaves = [v for v, d in graph.degree() if d == 1]
    graph.remove_nodes_from(leaves)
    return all(d <= 2 for _, d in graph.degree())


def tree_metrics(t: SpanningTree, instance) -> TreeMetrics:
    return TreeMetrics(length=tree_length(t, instance), hop_diameter=hop_diameter(t), plane=is_plane(t, instance))


def dual_graph(t: SpanningTree, instance) -> nx.Graph:
    """
    Dual of the subdivision a plane tree cuts out of a convex region.

    With the points at positions 0..n-1 along the boundary, face k is the one
    touching the boundary arc from position k to k+1 (cyclically), and chord
    (i, j) with i < j encloses arcs i..j-1. A face and a chord are adjacent
    when no other chord separates them.
    """
    _check_size(t, instance)
    order = instance.convex_order()
    if not is_plane(t, instance):
        raise NotPlaneError("dual graph needs a plane tree")
    pos = {v: k for k, v in enumerate(order)}
    chords = [tuple(sorted((pos[u], pos[v]))) for u, v in t.edges]

    def arc_inside(chord, k):
        return chord[0] <= k < chord[1]

    def chord_inside(inner, outer):
        return outer[0] <= inner[0] and inner[1] <= outer[1]

    dual = nx.Graph()
    dual.add_nodes_from(range(t.n))
    for e in chords:
        ends = []
        for k in range(t.n):
            if any(f != e and arc_inside(f, k) != chord_inside(e, f) for f in chords):
                continue
            ends.append(k)
        if len(ends) == 2:
            dual.add_edge(*ends)
    return dual


def dual_is_path(t: SpanningTree, instance) -> bool:
    """
    True iff the tree's drawing on a convex set zigzags: its dual graph is a path.
    Raises NotConvexError off convex position and NotPlaneError for crossing trees.
    """
    if t.n <= 2:
        return True
    dual = dual_graph(t, instance)
    return max(d for _, d in dual.degree()) <= 2
