# Copyright Cade Stocker 2026
import logging

import click

from planetree.commands._group import cli, handle_errors, settings
from planetree.models.flatconvex import FlatConvexSet, realize
from planetree.schemas import RenderParams
from planetree.utils.fileio_utils import read_instance, read_tree
from planetree.utils.svg_utils import write_svg

logger = logging.getLogger(__name__)


@cli.command('render')
@click.argument('input_path', metavar='INPUT', type=click.Path(dir_okay=False))
@click.option('--out', 'out', type=click.Path(dir_okay=False), required=True, help="SVG file to write.")
@click.option('--tree', 'tree_path', type=click.Path(dir_okay=False), default=None, help="Tree edges to draw.")
@click.option('--hull', is_flag=True, default=False, help="Outline the convex hull.")
@click.option('--eps', type=float, default=None, help="Realization height for flat input.")
@handle_errors
def render(input_path, out, tree_path, hull, eps):
    """Draw INPUT, and optionally a tree on it, as SVG."""
    params = RenderParams(input=input_path, output=out, tree=tree_path, hull=hull,
                          eps=settings().FLAT_EPS if eps is None else eps)
    instance = read_instance(params.input)
    if isinstance(instance, FlatConvexSet):
        instance = realize(instance, params.eps)
    tree = read_tree(params.tree, instance.n) if params.tree else None
    write_svg(instance, params.output, tree=tree, hull=params.hull)
    logger.info(f"rendered {instance.n} points to {params.output}")
