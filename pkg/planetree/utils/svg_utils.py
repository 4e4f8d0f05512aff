# Copyright Cade Stocker 2026
"""
SVG drawings of point sets and trees, rendered through the Jinja2 template
in planetree/templates. Output is byte-for-byte deterministic.
"""

from pathlib import Path
from typing import Dict, List, Optional, Tuple

from jinja2 import Environment, FileSystemLoader

from planetree.models.geom import PointSet
from planetree.models.spantree import SpanningTree

WIDTH = 800
HEIGHT = 600
MARGIN = 0.05

_env = Environment(
    loader=FileSystemLoader(str(Path(__file__).resolve().parent.parent / 'templates')),
    autoescape=False,
    keep_trailing_newline=True,
)


def _fmt(v: float) -> str:
    return f"{v:.3f}"


def _transform(ps: PointSet):
    xs = [float(p.x) for p in ps]
    ys = [float(p.y) for p in ps]
    min_x, max_x, min_y, max_y = min(xs), max(xs), min(ys), max(ys)
    span_x = max(max_x - min_x, 1e-12)
    span_y = max(max_y - min_y, 1e-12)
    inner_w = WIDTH * (1 - 2 * MARGIN)
    inner_h = HEIGHT * (1 - 2 * MARGIN)
    scale = min(inner_w / span_x, inner_h / span_y)
    off_x = (WIDTH - scale * span_x) / 2
    off_y = (HEIGHT - scale * span_y) / 2

    def to_screen(i: int) -> Tuple[float, float]:
        # y grows downward on screen
        return off_x + (xs[i] - min_x) * scale, HEIGHT - off_y - (ys[i] - min_y) * scale

    return to_screen


def render_svg(ps: PointSet, tree: Optional[SpanningTree] = None, hull: bool = False) -> str:
    to_screen = _transform(ps)
    screen = [to_screen(i) for i in range(ps.n)]
    dots: List[Dict[str, str]] = [{'cx': _fmt(x), 'cy': _fmt(y)} for x, y in screen]
    lines = []
    if tree is not None:
        for u, v in tree.edges:
            lines.append({'x1': _fmt(screen[u][0]), 'y1': _fmt(screen[u][1]),
                          'x2': _fmt(screen[v][0]), 'y2': _fmt(screen[v][1])})
    hull_points = ''
    if hull and ps.n >= 3:
        hull_points = ' '.join(f"{_fmt(screen[i][0])},{_fmt(screen[i][1])}" for i in ps.hull())
    return _env.get_template('drawing.svg.j2').render(
        width=WIDTH, height=HEIGHT, dots=dots, lines=lines, hull=hull_points,
    )


def write_svg(ps: PointSet, path, tree: Optional[SpanningTree] = None, hull: bool = False):
    Path(path).write_text(render_svg(ps, tree, hull), encoding='utf-8')
