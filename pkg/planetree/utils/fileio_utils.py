# Copyright Cade Stocker 2026
"""
Reading and writing the plain text formats.

    points       one "x y" per line
    tree         one "i j" edge per line
    flat set     header "arc" or "twin", then one "x [top|bottom]" per line
    caterpillar  "spine k1 k2 ... ks", the leaf count of each spine vertex

Blank lines and lines starting with '#' are skipped everywhere. Every parse
failure raises ParseError naming the file and line.
"""

from fractions import Fraction
from pathlib import Path
from typing import Iterator, List, Sequence, Tuple, Union

from planetree.algorithms.convexopt import caterpillar_from_form
from planetree.errors import ParseError
from planetree.models.flatconvex import BOTTOM, TOP, FlatConvexSet
from planetree.models.geom import Point, PointSet
from planetree.models.spantree import SpanningTree

PathLike = Union[str, Path]

FLAT_HEADERS = ('arc', 'twin')


def _lines(path: PathLike) -> Iterator[Tuple[int, List[str]]]:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise ParseError(f"cannot read file: {e.strerror}", path) from e
    except UnicodeDecodeError as e:
        raise ParseError("file is not UTF-8 text", path) from e
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith('#'):
            continue
        yield line_no, stripped.split()


def _write(path: PathLike, lines: Sequence[str]):
    Path(path).write_text(''.join(f"{line}\n" for line in lines), encoding='utf-8')


def format_coordinate(value: Fraction) -> str:
    """Exact decimal when the value has one, otherwise the float repr."""
    value = Fraction(value)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return repr(float(value))
    digits = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** digits // value.denominator
    sign = '-' if value < 0 else ''
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


# ====================
# Points
# ====================

def parse_points(path: PathLike) -> List[Point]:
    points = []
    for line_no, fields in _lines(path):
        if len(fields) != 2:
            raise ParseError(f"expected 'x y', got {len(fields)} fields", path, line_no)
        try:
            points.append(Point.of(fields[0], fields[1]))
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"bad coordinate: {e}", path, line_no) from e
    if not points:
        raise ParseError("no points in file", path)
    return points


def read_points(path: PathLike) -> PointSet:
    """Raises ParseError for malformed files and GeneralPositionError for degenerate ones."""
    return PointSet(parse_points(path))


def points_to_lines(ps) -> List[str]:
    return [f"{format_coordinate(p.x)} {format_coordinate(p.y)}" for p in ps]


def write_points(ps, path: PathLike):
    _write(path, points_to_lines(ps))


# ====================
# Trees
# ====================

def read_tree(path: PathLike, n: int) -> SpanningTree:
    edges = []
    for line_no, fields in _lines(path):
        if len(fields) != 2:
            raise ParseError(f"expected 'i j', got {len(fields)} fields", path, line_no)
        try:
            edges.append((int(fields[0]), int(fields[1])))
        except ValueError as e:
            raise ParseError(f"edge indices must be integers: {e}", path, line_no) from e
    return SpanningTree.from_edges(n, edges)


def tree_to_lines(t: SpanningTree) -> List[str]:
    return [f"{u} {v}" for u, v in t.edges]


def write_tree(t: SpanningTree, path: PathLike):
    _write(path, tree_to_lines(t))


# ====================
# Flat sets
# ====================

def is_flat_file(path: PathLike) -> bool:
    for _, fields in _lines(path):
        return len(fields) == 1 and fields[0].lower() in FLAT_HEADERS
    return False


def read_flat(path: PathLike) -> FlatConvexSet:
    rows = _lines(path)
    header = next(rows, None)
    if header is None or len(header[1]) != 1 or header[1][0].lower() not in FLAT_HEADERS:
        raise ParseError("flat file must start with 'arc' or 'twin'", path, header[0] if header else None)
    kind = header[1][0].lower()
    xs, sides = [], []
    for line_no, fields in rows:
        if len(fields) not in (1, 2):
            raise ParseError("expected 'x [top|bottom]'", path, line_no)
        try:
            xs.append(int(fields[0]))
        except ValueError as e:
            raise ParseError(f"flat x-coordinates must be integers: {e}", path, line_no) from e
        side = fields[1].lower() if len(fields) == 2 else TOP
        if side not in (TOP, BOTTOM):
            raise ParseError(f"side must be '{TOP}' or '{BOTTOM}', got {fields[1]!r}", path, line_no)
        sides.append(side)
    try:
        f = FlatConvexSet(xs, sides)
    except ValueError as e:
        raise ParseError(str(e), path) from e
    if f.kind != kind:
        raise ParseError(f"header says {kind} but the points form a {f.kind}", path)
    return f


def flat_to_lines(f: FlatConvexSet) -> List[str]:
    return [f.kind] + [f"{x} {side}" for x, side in zip(f.xs, f.sides)]


def write_flat(f: FlatConvexSet, path: PathLike):
    _write(path, flat_to_lines(f))


def read_instance(path: PathLike):
    """A FlatConvexSet for flat files, a PointSet otherwise."""
    return read_flat(path) if is_flat_file(path) else read_points(path)


# ====================
# Caterpillars
# ====================

def read_caterpillar(path: PathLike) -> SpanningTree:
    rows = list(_lines(path))
    if len(rows) != 1 or rows[0][1][0].lower() != 'spine':
        raise ParseError("expected a single 'spine k1 ... ks' line", path, rows[0][0] if rows else None)
    line_no, fields = rows[0]
    try:
        form = [int(x) for x in fields[1:]]
        return caterpillar_from_form(form)
    except ValueError as e:
        raise ParseError(f"bad leaf counts: {e}", path, line_no) from e


def write_caterpillar(form: Sequence[int], path: PathLike):
    _write(path, ["spine " + " ".join(str(c) for c in form)])
