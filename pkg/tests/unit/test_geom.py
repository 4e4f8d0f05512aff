# Copyright Cade Stocker 2026
import pytest
from decimal import Decimal
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from planetree.errors import GeneralPositionError, NotConvexError, PreconditionError
from planetree.models.geom import (
    Point,
    PointSet,
    Segment,
    convex_hull,
    orientation,
    segments_cross,
    validate_general_position,
)

coords = st.integers(min_value=-50, max_value=50)
points = st.tuples(coords, coords)


# ====================
# Points and orientation
# ====================

class TestPoint:
    def test_point_of_mixed_inputs(self):
        """Ints, decimal strings, Decimals and Fractions all become exact Fractions."""
        assert Point.of(1, '0.5') == Point(Fraction(1), Fraction(1, 2))
        assert Point.of(Decimal('0.25'), Fraction(3, 4)).x == Fraction(1, 4)

    def test_point_rejects_non_finite(self):
        """NaN and infinity are not coordinates."""
        with pytest.raises(ValueError):
            Point.of('nan', 0)
        with pytest.raises(ValueError):
            Point.of(float('inf'), 0)

    def test_point_rejects_bool(self):
        """Booleans are refused even though they are ints."""
        with pytest.raises(TypeError):
            Point.of(True, 0)

    def test_segment_needs_distinct_endpoints(self):
        """A segment from a point to itself is an error."""
        with pytest.raises(ValueError):
            Segment(2, 2)
        assert Segment(3, 1).key == (1, 3)


class TestOrientation:
    def test_left_right_collinear(self):
        """Left turn is +1, right turn is -1, collinear is 0."""
        p, q = Point.of(0, 0), Point.of(1, 0)
        assert orientation(p, q, Point.of(0, 1)) == 1
        assert orientation(p, q, Point.of(0, -1)) == -1
        assert orientation(p, q, Point.of(5, 0)) == 0

    def test_exact_on_tiny_offsets(self):
        """A point 1e-15 above a long line is still strictly left of it."""
        p, q = Point.of(0, 0), Point.of(10 ** 6, 0)
        assert orientation(p, q, Point.of('500000', '0.000000000000001')) == 1

    @given(points, points, points)
    def test_antisymmetric(self, a, b, c):
        """Swapping two arguments flips the sign."""
        p, q, r = Point.of(*a), Point.of(*b), Point.of(*c)
        assert orientation(p, q, r) == -orientation(q, p, r)
        assert orientation(p, q, r) == orientation(q, r, p)


# ====================
# General position
# ====================

class TestGeneralPosition:
    def test_duplicate_reported_first(self):
        """Duplicates are named by their two indices."""
        report = validate_general_position([(0, 0), (1, 2), (0, 0), (3, 3)])
        assert not report
        assert report.kind == 'duplicate'
        assert report.indices == (0, 2)

    def test_collinear_triple(self):
        """The first collinear triple in lexicographic order is reported."""
        report = validate_general_position([(0, 0), (1, 5), (1, 1), (2, 2)])
        assert report.kind == 'collinear'
        assert report.indices == (0, 2, 3)

    def test_pointset_raises(self):
        """PointSet refuses degenerate input with a precondition error."""
        with pytest.raises(GeneralPositionError) as exc:
            PointSet([(0, 0), (1, 1), (2, 2)])
        assert isinstance(exc.value, PreconditionError)
        assert '(0, 1, 2)' in str(exc.value)

    def test_ok_report_is_truthy(self, triangle):
        """A good set gives a truthy report."""
        assert validate_general_position(triangle)


# ====================
# Point sets
# ====================

class TestPointSet:
    def test_edge_length(self, triangle):
        """Lengths come from the distance matrix."""
        assert triangle.edge_length(0, 1) == pytest.approx(4.0)
        assert triangle.edge_length(1, 2) == pytest.approx(5.0)
        assert triangle.squared_distance(1, 2) == 25

    def test_crossing_diagonals(self, square):
        """The two diagonals of a square cross; sides sharing a corner do not."""
        assert square.crosses((0, 2), (1, 3))
        assert not square.crosses((0, 1), (1, 2))
        assert not square.crosses((0, 1), (2, 3))

    def test_segments_cross_accepts_segments(self, square):
        """Segment objects and index pairs are interchangeable."""
        assert segments_cross(Segment(0, 2), Segment(1, 3), square)
        assert segments_cross((0, 2), (3, 1), square)

    def test_segments_cross_index_out_of_range(self, square):
        """Indices outside the set are a ValueError."""
        with pytest.raises(ValueError):
            segments_cross((0, 7), (1, 3), square)

    def test_hull_counterclockwise(self, square):
        """Hull starts at the lowest leftmost point and runs counterclockwise."""
        assert convex_hull(square) == [0, 1, 2, 3]
        assert square.is_convex_position()
        assert square.convex_order() == [0, 1, 2, 3]

    def test_hull_skips_interior(self, kite):
        """An interior point is not on the hull and convex_order refuses the set."""
        assert sorted(kite.hull()) == [0, 1, 2]
        assert not kite.is_convex_position()
        with pytest.raises(NotConvexError):
            kite.convex_order()

    def test_hull_needs_three_points(self):
        """convex_hull is undefined below three points."""
        with pytest.raises(PreconditionError):
            convex_hull(PointSet([(0, 0), (1, 1)]))

    @settings(max_examples=50, deadline=None)
    @given(st.lists(points, min_size=3, max_size=7, unique=True))
    def test_crossing_symmetric(self, pts):
        """crosses(e, f) == crosses(f, e) on any set in general position."""
        if not validate_general_position(pts):
            return
        ps = PointSet(pts)
        n = ps.n
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for e in edges:
            for f in edges:
                assert ps.crosses(e, f) == ps.crosses(f, e)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(points, min_size=3, max_size=7, unique=True))
    def test_hull_invariant_under_relabeling(self, pts):
        """Reversing the input order relabels the hull but keeps its vertex set."""
        if not validate_general_position(pts):
            return
        forward = PointSet(pts)
        backward = PointSet(list(reversed(pts)))
        n = len(pts)
        assert sorted(n - 1 - i for i in backward.hull()) == sorted(forward.hull())
