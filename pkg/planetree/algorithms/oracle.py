# Copyright Cade Stocker 2026
"""
Brute-force ground truth for small instances.

Plane spanning trees are enumerated by backtracking over the canonically
ordered edges: each edge is first included (if it joins two components and
crosses nothing chosen so far) and then skipped. Trees come out in
lexicographic order of their sorted edge lists, and a branch is cut as soon as
the edges still allowed can no longer connect everything.

Every function accepts a PointSet or a FlatConvexSet; on flat sets lengths are
exact integers.
"""

import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import Callable, List, Optional, Tuple, Union

import networkx as nx

from planetree.algorithms.localsearch import find_swap
from planetree.algorithms.tables import EdgeTables
from planetree.errors import CapExceededError, PreconditionError
from planetree.models.spantree import SpanningTree, hop_diameter, is_plane, tree_length

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_CAP = 10


@dataclass(frozen=True)
class OracleResult:
    best_tree: SpanningTree
    best_length: Union[int, float]
    count_enumerated: int


def check_cap(n: int, cap: Optional[int] = None) -> int:
    cap = DEFAULT_ORACLE_CAP if cap is None else cap
    if cap > DEFAULT_ORACLE_CAP:
        logger.warning(f"oracle cap raised to {cap}; enumeration may take very long")
    if n > cap:
        raise CapExceededError(n, cap)
    return cap


def _length(tables: EdgeTables, ids) -> Union[int, float]:
    if tables.exact:
        return sum(tables.weights[k] for k in ids)
    return math.fsum(tables.weights[k] for k in ids)


def _walk(tables: EdgeTables, on_tree: Callable[[Tuple[int, ...]], None]) -> int:
    n, m = tables.n, tables.m
    cross, edges = tables.cross, tables.edges
    need = n - 1
    chosen: List[int] = []
    count = 0

    if n == 1:
        on_tree(())
        return 1

    def connectable(start, comp, forbidden):
        root = list(range(n))

        def find(x):
            while root[x] != x:
                root[x] = root[root[x]]
                x = root[x]
            return x

        groups = len(set(comp))
        for k in range(start, m):
            if forbidden >> k & 1:
                continue
            u, v = edges[k]
            ru, rv = find(comp[u]), find(comp[v])
            if ru != rv:
                root[ru] = rv
                groups -= 1
                if groups == 1:
                    return True
        return groups == 1

    def search(idx, comp, forbidden):
        nonlocal count
        if len(chosen) == need:
            count += 1
            on_tree(tuple(chosen))
            return
        if m - idx < need - len(chosen):
            return
        u, v = edges[idx]
        if not forbidden >> idx & 1 and comp[u] != comp[v]:
            old, new = comp[v], comp[u]
            merged = [new if c == old else c for c in comp]
            chosen.append(idx)
            search(idx + 1, merged, forbidden | cross[idx])
            chosen.pop()
        if connectable(idx + 1, comp, forbidden):
            search(idx + 1, comp, forbidden)

    search(0, list(range(n)), 0)
    return count


def enumerate_plane_spanning_trees(instance, visit: Callable[[SpanningTree], None] = None, cap: int = None,
                                   tables: EdgeTables = None) -> int:
    """Visit every plane spanning tree once, in lexicographic order; returns how many there are."""
    check_cap(instance.n, cap)
    tables = tables or EdgeTables(instance)

    def on_tree(ids):
        if visit is not None:
            visit(SpanningTree.trusted(tables.n, (tables.edges[k] for k in ids)))

    count = _walk(tables, on_tree)
    logger.debug(f"enumerated {count} plane spanning trees on {instance.n} points")
    return count


def _best(instance, cap, keep: Callable[[SpanningTree], bool] = None) -> Optional[OracleResult]:
    check_cap(instance.n, cap)
    tables = EdgeTables(instance)
    best = {'ids': None, 'length': None}

    def on_tree(ids):
        length = _length(tables, ids)
        if best['length'] is not None and not length > best['length']:
            return
        if keep is not None and not keep(SpanningTree.trusted(tables.n, (tables.edges[k] for k in ids))):
            return
        best['ids'], best['length'] = ids, length

    count = _walk(tables, on_tree)
    if best['ids'] is None:
        return None
    tree = SpanningTree.trusted(tables.n, (tables.edges[k] for k in best['ids']))
    return OracleResult(best_tree=tree, best_length=best['length'], count_enumerated=count)


def longest_plane_tree_bruteforce(instance, cap: int = None) -> OracleResult:
    """Longest plane spanning tree; ties go to the lexicographically smallest edge list."""
    return _best(instance, cap)


def longest_plane_tree_diameter_at_most(instance, d: int, cap: int = None) -> OracleResult:
    if d < 1:
        raise ValueError(f"diameter bound must be at least 1, got {d}")
    result = _best(instance, cap, keep=lambda t: hop_diameter(t) <= d)
    if result is None:
        raise PreconditionError(f"no plane spanning tree on {instance.n} points has diameter at most {d}")
    return result


def longest_crossing_tree(instance) -> OracleResult:
    """Maximum spanning tree of the complete graph, crossings allowed."""
    n = instance.n
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            graph.add_edge(i, j, weight=instance.edge_length(i, j))
    mst = nx.maximum_spanning_tree(graph)
    tree = SpanningTree.trusted(n, mst.edges())
    return OracleResult(best_tree=tree, best_length=tree_length(tree, instance), count_enumerated=0)


def local_optima_scan(instance, cap: int = None) -> List[Tuple[SpanningTree, Union[int, float]]]:
    """All plane spanning trees that no single improving swap can lengthen."""
    check_cap(instance.n, cap)
    tables = EdgeTables(instance)
    found = []

    def on_tree(ids):
        if find_swap(tables, ids, first=True) is None:
            tree = SpanningTree.trusted(tables.n, (tables.edges[k] for k in ids))
            found.append((tree, _length(tables, ids)))

    count = _walk(tables, on_tree)
    logger.debug(f"{len(found)} local optima among {count} plane trees")
    return found


# ====================
# Assignment enumeration for rooted families
# ====================

def _best_assignment(instance, root_edges, roots, others) -> Optional[OracleResult]:
    best_tree, best_length, count = None, None, 0
    for labels in product(roots, repeat=len(others)):
        edges = list(root_edges) + [(r, p) for r, p in zip(labels, others)]
        tree = SpanningTree.trusted(instance.n, edges)
        if not is_plane(tree, instance):
            continue
        count += 1
        length = tree_length(tree, instance)
        if best_length is None or length > best_length or (length == best_length and tree.edges < best_tree.edges):
            best_tree, best_length = tree, length
    if best_tree is None:
        return None
    return OracleResult(best_tree=best_tree, best_length=best_length, count_enumerated=count)


def longest_bistar_bruteforce(instance, a: int, b: int) -> OracleResult:
    """Best plane bistar on roots a, b over all 2^(n-2) ways of attaching the other points."""
    if a == b:
        raise ValueError("bistar roots must differ")
    others = [p for p in range(instance.n) if p not in (a, b)]
    return _best_assignment(instance, [(a, b)], (a, b), others)


def longest_tristar_bruteforce(instance, a: int, b: int, c: int) -> Optional[OracleResult]:
    """Best plane tree whose edges all touch a, b or c: three root-edge choices times 3^(n-3) attachments."""
    if len({a, b, c}) != 3:
        raise ValueError("tristar roots must be distinct")
    others = [p for p in range(instance.n) if p not in (a, b, c)]
    best = None
    for root_edges in (((a, c), (b, c)), ((a, b), (a, c)), ((a, b), (b, c))):
        result = _best_assignment(instance, root_edges, (a, b, c), others)
        if result is None:
            continue
        if (best is None or result.best_length > best.best_length
                or (result.best_length == best.best_length and result.best_tree.edges < best.best_tree.edges)):
            best = result
    return best
