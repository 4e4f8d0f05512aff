# Copyright Cade Stocker 2026
import pytest
from fractions import Fraction

from planetree.algorithms.generators import counterexample_9pt, p4k2, random_general_position
from planetree.errors import GeneralPositionError, InvalidTreeError, ParseError
from planetree.models.flatconvex import FlatConvexSet
from planetree.models.spantree import SpanningTree
from planetree.utils.fileio_utils import (
    flat_to_lines,
    format_coordinate,
    is_flat_file,
    read_caterpillar,
    read_flat,
    read_instance,
    read_points,
    read_tree,
    tree_to_lines,
    write_caterpillar,
    write_flat,
    write_points,
    write_tree,
)


class TestFormatCoordinate:
    @pytest.mark.parametrize('value, expected', [
        (Fraction(5), '5'),
        (Fraction(-3, 4), '-0.75'),
        (Fraction(1, 2), '0.5'),
        (Fraction(123456, 10 ** 6), '0.123456'),
        (Fraction(1, 3), '0.3333333333333333'),
    ])
    def test_values(self, value, expected):
        """Exact decimals when the denominator allows, float repr otherwise."""
        assert format_coordinate(value) == expected


# ====================
# Points and trees
# ====================

class TestPointFiles:
    def test_round_trip(self, tmp_path):
        """Generated points survive a write and read unchanged."""
        for ps in (random_general_position(9, 7), counterexample_9pt()):
            path = tmp_path / 'points.txt'
            write_points(ps, path)
            assert read_points(path) == ps

    def test_comments_and_blank_lines(self, write_file):
        """Comments and blank lines are skipped."""
        path = write_file('p.txt', "# header\n0 0\n\n4 0\n  # indented comment\n0 3\n")
        assert read_points(path).n == 3

    def test_bad_field_count(self, write_file):
        """The parse error names file and line."""
        path = write_file('p.txt', "0 0\n1 2 3\n")
        with pytest.raises(ParseError) as exc:
            read_points(path)
        assert exc.value.line_no == 2
        assert ':2:' in str(exc.value)

    def test_bad_number(self, write_file):
        """Non-numeric coordinates are parse errors."""
        path = write_file('p.txt', "0 zero\n")
        with pytest.raises(ParseError):
            read_points(path)

    def test_empty_and_missing(self, write_file, tmp_path):
        """Empty and missing files are parse errors."""
        with pytest.raises(ParseError):
            read_points(write_file('empty.txt', "# nothing\n"))
        with pytest.raises(ParseError):
            read_points(tmp_path / 'missing.txt')

    def test_degenerate_points(self, write_file):
        """Collinear input parses but fails the general position check."""
        path = write_file('p.txt', "0 0\n1 1\n2 2\n")
        with pytest.raises(GeneralPositionError):
            read_points(path)


class TestTreeFiles:
    def test_round_trip(self, tmp_path):
        """Edge lists round-trip."""
        t = SpanningTree.from_edges(4, [(0, 3), (1, 3), (1, 2)])
        path = tmp_path / 'tree.txt'
        write_tree(t, path)
        assert read_tree(path, 4) == t
        assert tree_to_lines(t) == ['0 3', '1 2', '1 3']

    def test_invalid_tree(self, write_file):
        """A cycle is an invalid tree, not a parse error."""
        path = write_file('t.txt', "0 1\n1 2\n2 0\n")
        with pytest.raises(InvalidTreeError):
            read_tree(path, 4)

    def test_non_integer_index(self, write_file):
        """Indices must be integers."""
        with pytest.raises(ParseError):
            read_tree(write_file('t.txt', "0 1.5\n"), 2)


# ====================
# Flat sets and caterpillars
# ====================

class TestFlatFiles:
    def test_round_trip_twin(self, tmp_path):
        """Twins keep their side tags."""
        f = p4k2(1)
        path = tmp_path / 'flat.txt'
        write_flat(f, path)
        assert is_flat_file(path)
        assert read_flat(path) == f
        assert read_instance(path) == f
        assert flat_to_lines(f)[0] == 'twin'

    def test_side_defaults_to_top(self, write_file):
        """Missing side tags mean top."""
        path = write_file('f.txt', "arc\n0\n1\n4\n6\n")
        assert read_flat(path) == FlatConvexSet([0, 1, 4, 6])

    def test_header_mismatch(self, write_file):
        """An 'arc' header over a twin is an error."""
        path = write_file('f.txt', "arc\n0 top\n5 top\n3 bottom\n")
        with pytest.raises(ParseError):
            read_flat(path)

    def test_bad_side_and_shape(self, write_file):
        """Unknown sides and invalid shapes are parse errors."""
        with pytest.raises(ParseError):
            read_flat(write_file('f1.txt', "arc\n0 left\n1\n"))
        with pytest.raises(ParseError):
            read_flat(write_file('f2.txt', "arc\n0\n0\n"))

    def test_point_file_not_flat(self, write_file):
        """A points file is read as points."""
        path = write_file('p.txt', "0 0\n4 0\n0 3\n")
        assert not is_flat_file(path)
        assert read_instance(path).n == 3


class TestCaterpillarFiles:
    def test_round_trip(self, tmp_path):
        """Leaf counts are written on one spine line."""
        path = tmp_path / 'cat.txt'
        write_caterpillar((1, 0, 2), path)
        assert path.read_text() == "spine 1 0 2\n"
        assert read_caterpillar(path).n == 6

    def test_bad_counts(self, write_file):
        """Spine ends without leaves are parse errors."""
        with pytest.raises(ParseError):
            read_caterpillar(write_file('c.txt', "spine 0 2\n"))
        with pytest.raises(ParseError):
            read_caterpillar(write_file('c2.txt', "tree 1 1\n"))
