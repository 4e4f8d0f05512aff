# Copyright Cade Stocker 2026
import pytest
from itertools import combinations, product

from planetree.algorithms.bistar import (
    ValidPair,
    bistar_table,
    longest_diameter3_tree,
    longest_plane_bistar,
    solve_side,
)
from planetree.algorithms.generators import random_general_position
from planetree.algorithms.oracle import (
    enumerate_plane_spanning_trees,
    longest_bistar_bruteforce,
    longest_plane_tree_diameter_at_most,
)
from planetree.errors import PreconditionError
from planetree.models.geom import PointSet
from planetree.models.spantree import SpanningTree, hop_diameter, is_plane, tree_length


class TestBistar:
    @pytest.mark.parametrize('n, seed', [(5, 1), (6, 2), (7, 3)])
    def test_matches_assignment_enumeration(self, n, seed):
        """For every root pair the DP equals the 2^(n-2) enumeration."""
        ps = random_general_position(n, seed)
        for a, b in combinations(range(n), 2):
            tree = longest_plane_bistar(ps, a, b)
            assert is_plane(tree, ps)
            assert (a, b) in tree.edges
            assert tree_length(tree, ps) == pytest.approx(longest_bistar_bruteforce(ps, a, b).best_length, abs=1e-9)

    def test_root_order_irrelevant(self):
        """Swapping the roots gives the same length."""
        ps = random_general_position(7, 8)
        assert tree_length(longest_plane_bistar(ps, 2, 5), ps) == pytest.approx(
            tree_length(longest_plane_bistar(ps, 5, 2), ps), abs=1e-12)

    def test_bad_roots(self, triangle):
        """Equal or out-of-range roots are argument misuse."""
        with pytest.raises(ValueError):
            longest_plane_bistar(triangle, 1, 1)
        with pytest.raises(ValueError):
            longest_plane_bistar(triangle, 0, 9)

    def test_two_points(self):
        """Two points: the bistar is the single edge."""
        ps = random_general_position(2, 4)
        assert longest_plane_bistar(ps, 0, 1).edges == ((0, 1),)


class TestSideTable:
    def test_solve_side_rejects_mixed_sides(self, square):
        """Side points must all be on one side of the root line."""
        with pytest.raises(PreconditionError):
            solve_side(square, 0, 2, [1, 3])

    def test_table_keys_are_valid_pairs(self):
        """The Z table is keyed by ValidPair with nonnegative values."""
        ps = random_general_position(7, 5)
        above = any(ps.orient(0, 1, x) > 0 for x in range(2, 7))
        table = bistar_table(ps, 0, 1, above=above)
        assert all(isinstance(key, ValidPair) for key in table)
        assert all(value >= 0 for value in table.values())

    def test_z_grows_with_the_point_set(self):
        """Adding a point on the table's side never lowers Z of a pair both instances share."""
        compared = 0
        for seed in range(40, 46):
            ps = random_general_position(8, seed)
            above = ps.orient(0, 1, 7) > 0
            big = bistar_table(ps, 0, 1, above=above)
            small = bistar_table(PointSet(ps.points[:7]), 0, 1, above=above)
            for key, value in small.items():
                if key in big:
                    assert value <= big[key] + 1e-9
                    compared += 1
        assert compared > 0


class TestDiameterThree:
    @pytest.mark.parametrize('n, seed', [(4, 21), (5, 22), (6, 23), (7, 24)])
    def test_matches_oracle(self, n, seed):
        """Best bistar over all pairs equals the best plane tree of diameter at most 3."""
        ps = random_general_position(n, seed)
        tree = longest_diameter3_tree(ps)
        assert hop_diameter(tree) <= 3
        assert is_plane(tree, ps)
        oracle = longest_plane_tree_diameter_at_most(ps, 3).best_length
        assert tree_length(tree, ps) == pytest.approx(oracle, abs=1e-9)

    @pytest.mark.parametrize('n, seed', [(5, 25), (6, 26)])
    def test_low_diameter_trees_are_bistars(self, n, seed):
        """The plane trees of diameter at most 3 are exactly the plane bistars over all root pairs."""
        ps = random_general_position(n, seed)
        low = set()

        def visit(t):
            if hop_diameter(t) <= 3:
                low.add(t.edges)

        enumerate_plane_spanning_trees(ps, visit)

        bistars = set()
        for a, b in combinations(range(n), 2):
            others = [x for x in range(n) if x not in (a, b)]
            for roots in product((a, b), repeat=len(others)):
                t = SpanningTree.from_edges(n, [(a, b)] + list(zip(roots, others)))
                if is_plane(t, ps):
                    bistars.add(t.edges)
        assert low == bistars

    def test_jobs_do_not_change_result(self):
        """A process pool over root pairs returns the same tree as the serial loop."""
        ps = random_general_position(7, 27)
        assert longest_diameter3_tree(ps, jobs=2) == longest_diameter3_tree(ps)
        with pytest.raises(ValueError):
            longest_diameter3_tree(ps, jobs=0)
