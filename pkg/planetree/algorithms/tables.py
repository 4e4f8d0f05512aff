# Copyright Cade Stocker 2026
"""
Precomputed edge tables shared by the enumeration oracle and local search.

Edges of the complete graph are numbered in canonical order ((0,1), (0,2), ...
(n-2,n-1)), so a sorted tuple of edge numbers orders trees exactly like their
sorted edge lists. Crossings are stored as one bitmask per edge.
"""

import logging
from typing import Iterable, List, Tuple

logger = logging.getLogger(__name__)


class EdgeTables:
    def __init__(self, instance):
        self.instance = instance
        self.n = instance.n
        self.exact = instance.exact
        self.edges: List[Tuple[int, int]] = [(i, j) for i in range(self.n) for j in range(i + 1, self.n)]
        self.index = {e: k for k, e in enumerate(self.edges)}
        self.weights = [instance.edge_length(i, j) for i, j in self.edges]

        m = len(self.edges)
        cross = [0] * m
        for k in range(m):
            for l in range(k + 1, m):
                if instance.crosses(self.edges[k], self.edges[l]):
                    cross[k] |= 1 << l
                    cross[l] |= 1 << k
        self.cross = cross
        logger.debug(f"edge tables: {self.n} points, {m} edges")

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> int:
        return self.index[(u, v) if u < v else (v, u)]

    def mask(self, ids: Iterable[int]) -> int:
        bits = 0
        for k in ids:
            bits |= 1 << k
        return bits
