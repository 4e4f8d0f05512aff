# Copyright Cade Stocker 2026
"""
Local improvement by single edge swaps.

A swap adds a non-tree edge f and removes an edge e on the cycle f closes,
provided |e| < |f| and the new tree stays plane. Since the current tree is
plane, f may cross at most one tree edge, and if it crosses one that edge is
the only candidate for removal.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from planetree.algorithms.tables import EdgeTables
from planetree.errors import NotPlaneError
from planetree.models.spantree import Edge, SpanningTree, is_plane, tree_length

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Swap:
    added: Edge
    removed: Edge
    gain: float


@dataclass(frozen=True)
class SwapStep:
    removed: Edge
    added: Edge
    length: float


@dataclass
class SwapTrace:
    start_length: float
    steps: List[SwapStep] = field(default_factory=list)

    def __len__(self):
        return len(self.steps)

    @property
    def lengths(self) -> List[float]:
        return [self.start_length] + [s.length for s in self.steps]


def _parents(n: int, tree_ids, tables: EdgeTables, root: int):
    adj = [[] for _ in range(n)]
    for k in tree_ids:
        u, v = tables.edges[k]
        adj[u].append((v, k))
        adj[v].append((u, k))
    parent = [None] * n
    parent[root] = (root, -1)
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w, k in adj[v]:
            if parent[w] is None:
                parent[w] = (v, k)
                queue.append(w)
    return parent


def find_swap(tables: EdgeTables, tree_ids, first: bool = False) -> Optional[Tuple[int, int]]:
    """
    Best improving swap as (added edge id, removed edge id), or None.

    Ties in gain go to the smaller (added, removed) pair. With first=True the
    first admissible swap in edge order is returned instead of the best.
    """
    n = tables.n
    tree_ids = list(tree_ids)
    tree_mask = tables.mask(tree_ids)
    weights = tables.weights
    parents = {}
    best = None
    best_gain = None
    for f in range(tables.m):
        if tree_mask >> f & 1:
            continue
        blocked = tables.cross[f] & tree_mask
        if blocked & (blocked - 1):
            continue
        u, v = tables.edges[f]
        if u not in parents:
            parents[u] = _parents(n, tree_ids, tables, u)
        parent = parents[u]
        path = []
        w = v
        while w != u:
            w, k = parent[w]
            path.append(k)
        if blocked:
            e = blocked.bit_length() - 1
            candidates = [e] if e in path else []
        else:
            candidates = path
        for e in sorted(candidates):
            if not weights[e] < weights[f]:
                continue
            gain = weights[f] - weights[e]
            if first:
                return f, e
            if best is None or gain > best_gain or (gain == best_gain and (f, e) < best):
                best, best_gain = (f, e), gain
    return best


def improving_swap_exists(t: SpanningTree, instance, tables: EdgeTables = None) -> Optional[Swap]:
    """The best improving swap for a plane tree, or None when the tree is a local optimum."""
    if not is_plane(t, instance):
        raise NotPlaneError("local search needs a plane starting tree")
    tables = tables or EdgeTables(instance)
    found = find_swap(tables, [tables.edge_id(u, v) for u, v in t.edges])
    if found is None:
        return None
    f, e = found
    return Swap(added=tables.edges[f], removed=tables.edges[e], gain=tables.weights[f] - tables.weights[e])


def alg_local(instance, t0: SpanningTree, max_steps: int = None) -> Tuple[SpanningTree, SwapTrace]:
    """Apply the best improving swap until none is left."""
    if not is_plane(t0, instance):
        raise NotPlaneError("local search needs a plane starting tree")
    tables = EdgeTables(instance)
    ids = set(tables.edge_id(u, v) for u, v in t0.edges)
    trace = SwapTrace(start_length=tree_length(t0, instance))
    length = trace.start_length
    while max_steps is None or len(trace) < max_steps:
        found = find_swap(tables, sorted(ids))
        if found is None:
            break
        f, e = found
        ids.remove(e)
        ids.add(f)
        current = SpanningTree.trusted(instance.n, (tables.edges[k] for k in ids))
        length = tree_length(current, instance)
        trace.steps.append(SwapStep(removed=tables.edges[e], added=tables.edges[f], length=length))
        logger.debug(f"swap {len(trace)}: -{tables.edges[e]} +{tables.edges[f]} length={length}")
    final = SpanningTree.trusted(instance.n, (tables.edges[k] for k in ids))
    return final, trace
