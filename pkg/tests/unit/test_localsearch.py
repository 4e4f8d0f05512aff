# Copyright Cade Stocker 2026
import math
import pytest

from planetree.algorithms.generators import counterexample_9pt, random_general_position
from planetree.algorithms.localsearch import alg_local, improving_swap_exists
from planetree.algorithms.oracle import local_optima_scan, longest_plane_tree_bruteforce
from planetree.errors import NotPlaneError
from planetree.models.spantree import SpanningTree, is_plane, tree_length


class TestLocalSearch:
    def test_square_reaches_optimum(self, square):
        """From three sides one swap brings in a diagonal."""
        start = SpanningTree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        tree, trace = alg_local(square, start)
        assert tree_length(tree, square) == pytest.approx(2 + math.sqrt(2))
        assert len(trace) >= 1
        assert trace.start_length == pytest.approx(3.0)
        assert all(b > a for a, b in zip(trace.lengths, trace.lengths[1:]))

    def test_swap_found_and_absent(self, square):
        """A side-only tree has an improving swap; the optimum has none."""
        start = SpanningTree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        swap = improving_swap_exists(start, square)
        assert swap is not None
        assert swap.gain > 0
        best = longest_plane_tree_bruteforce(square).best_tree
        assert improving_swap_exists(best, square) is None

    def test_max_steps(self, square):
        """max_steps = 0 leaves the start tree alone."""
        start = SpanningTree.from_edges(4, [(0, 1), (1, 2), (2, 3)])
        tree, trace = alg_local(square, start, max_steps=0)
        assert tree == start
        assert len(trace) == 0

    def test_needs_plane_start(self, square):
        """Crossing starting trees are refused."""
        with pytest.raises(NotPlaneError):
            alg_local(square, SpanningTree.from_edges(4, [(0, 2), (1, 3), (0, 1)]))

    @pytest.mark.parametrize('seed', [3, 4, 5])
    def test_result_is_plane_local_optimum(self, seed):
        """The result is plane, no shorter than the start, and in the local optima scan."""
        ps = random_general_position(6, seed)
        start = SpanningTree.from_edges(6, [(0, i) for i in range(1, 6)])
        tree, trace = alg_local(ps, start)
        assert is_plane(tree, ps)
        assert tree_length(tree, ps) >= trace.start_length
        assert improving_swap_exists(tree, ps) is None
        assert tree in {t for t, _ in local_optima_scan(ps)}


# ====================
# Nine-point set
# ====================

class TestStuckConfiguration:
    @pytest.mark.slow
    def test_local_optimum_below_global(self):
        """The nine-point set has a plane tree no single swap improves that is still not the longest."""
        ps = counterexample_9pt()
        optima = local_optima_scan(ps)
        best = max(length for _, length in optima)
        stuck = [tree for tree, length in optima if length < best - 1e-9]
        assert stuck
        tree, trace = alg_local(ps, stuck[0])
        assert tree == stuck[0]
        assert len(trace) == 0
