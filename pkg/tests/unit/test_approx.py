# Copyright Cade Stocker 2026
import pytest

from planetree.algorithms.approx import (
    alg_simple,
    approx_constant_f,
    beta_from,
    beta_lower,
    check_algebra_roots,
    flat_four_tree_check,
    poly_p,
    polynomial_roots,
    star,
    wedge_tree,
)
from planetree.algorithms.generators import arc_Pn, p4k2, random_general_position
from planetree.algorithms.oracle import longest_plane_tree_bruteforce
from planetree.errors import PreconditionError
from planetree.models.geom import PointSet
from planetree.models.spantree import hop_diameter, is_plane, tree_length


# ====================
# Constants
# ====================

class TestConstants:
    def test_f_value(self):
        """f is the root of P near 0.546723 and beta is about 0.1604."""
        c = approx_constant_f()
        assert abs(poly_p(c.f)) <= 1e-10
        assert c.f == pytest.approx(0.546723, abs=1e-5)
        assert c.beta == pytest.approx(0.1604, abs=1e-3)

    def test_beta_bounds_meet_at_f(self):
        """Both expressions for beta agree at f."""
        f = approx_constant_f().f
        assert beta_lower(f) == pytest.approx(beta_from(f), abs=1e-9)

    def test_five_eighths(self):
        """x = 5/8 satisfies the constraint exactly."""
        assert abs(beta_lower(5 / 8) - beta_from(5 / 8)) <= 1e-12

    def test_algebra_report(self):
        """Squaring introduces roots of P that do not solve the original equation."""
        report = check_algebra_roots()
        assert report.ok
        assert len(report.spurious) == 2

    def test_polynomial_roots(self):
        """The fourth smallest real root of P is f; (8x - 5) P adds 5/8."""
        roots = polynomial_roots()
        assert roots.f == pytest.approx(approx_constant_f().f, abs=1e-9)
        assert any(abs(r - 0.625) < 1e-9 for r in roots.extended_roots)
        assert len(roots.extended_roots) == len(roots.p_roots) + 1


# ====================
# Candidate trees
# ====================

class TestCandidates:
    def test_star_out_of_range(self, triangle):
        """Root index must exist."""
        with pytest.raises(ValueError):
            star(triangle, 3)

    @pytest.mark.parametrize('seed', [1, 2, 3, 4, 5])
    def test_wedge_tree_shape(self, seed):
        """Wedge trees are plane, contain the root edge and have diameter at most 4."""
        ps = random_general_position(8, seed)
        for a, b in [(0, 1), (2, 5), (7, 3)]:
            t = wedge_tree(ps, a, b)
            assert is_plane(t, ps)
            assert (min(a, b), max(a, b)) in t.edges
            assert hop_diameter(t) <= 4

    def test_wedge_tree_roots_differ(self, triangle):
        """Equal roots are refused."""
        with pytest.raises(ValueError):
            wedge_tree(triangle, 1, 1)

    def test_alg_simple_needs_two_points(self):
        """A single point has nothing to approximate."""
        with pytest.raises(PreconditionError):
            alg_simple(PointSet([(0, 0)]))

    @pytest.mark.parametrize('n, seed', [(4, 11), (5, 12), (6, 13), (7, 14)])
    def test_guarantee(self, n, seed):
        """The approximation is at least f times the optimum."""
        ps = random_general_position(n, seed)
        f = approx_constant_f().f
        simple = tree_length(alg_simple(ps), ps)
        assert simple >= f * longest_plane_tree_bruteforce(ps).best_length


# ====================
# Flat averaging
# ====================

class TestFourTrees:
    @pytest.mark.parametrize('n', [4, 6, 8])
    def test_average_beats_two_thirds(self, n):
        """On evenly spaced arcs the four-tree average reaches 2/3 of the crossing tree."""
        report = flat_four_tree_check(arc_Pn(n))
        assert report.holds
        assert report.star_a == report.star_b

    def test_twin_refused(self):
        """Only single arcs are supported."""
        with pytest.raises(PreconditionError):
            flat_four_tree_check(p4k2(1))
