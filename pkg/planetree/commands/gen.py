# Copyright Cade Stocker 2026
"""
`planetree gen`: write a generated instance as a point file or a flat file.

Flat families (arc, diambound, p4k2, caterpillar) produce flat files; the rest
produce point files. Output is deterministic for fixed arguments.
"""

import logging

import click

from planetree.algorithms.convexopt import caterpillar_from_form, caterpillar_to_flat_arc
from planetree.algorithms.generators import (
    arc_Pn,
    counterexample_9pt,
    diameter_bound_arc,
    p4k2,
    random_convex_position,
    random_general_position,
)
from planetree.commands._group import cli, handle_errors
from planetree.models.flatconvex import FlatConvexSet
from planetree.schemas import FAMILIES, GenParams
from planetree.utils.fileio_utils import flat_to_lines, points_to_lines, read_caterpillar, write_flat, write_points

logger = logging.getLogger(__name__)


def build_instance(params: GenParams):
    if params.family == 'arc':
        return arc_Pn(params.n)
    if params.family == 'diambound':
        return diameter_bound_arc(params.d)
    if params.family == 'p4k2':
        return p4k2(params.k)
    if params.family == 'random':
        return random_general_position(params.n, params.seed)
    if params.family == 'convex':
        return random_convex_position(params.n, params.seed)
    if params.family == 'counterexample9':
        return counterexample_9pt()
    if params.spine:
        return caterpillar_to_flat_arc(read_caterpillar(params.spine))
    try:
        form = [int(c) for c in params.form.split(',')]
    except ValueError:
        raise ValueError(f"form must be comma separated leaf counts, got {params.form!r}")
    return caterpillar_to_flat_arc(caterpillar_from_form(form))


@cli.command('gen')
@click.argument('family', type=click.Choice(FAMILIES))
@click.option('--n', type=int, default=None, help="Number of points (arc, random, convex).")
@click.option('--d', type=int, default=None, help="Diameter bound (diambound).")
@click.option('--k', type=int, default=None, help="Size parameter (p4k2).")
@click.option('--seed', type=int, default=0, show_default=True)
@click.option('--form', default=None, help="Caterpillar leaf counts along the spine, e.g. '1,0,2'.")
@click.option('--spine', type=click.Path(dir_okay=False), default=None,
              help="Caterpillar file ('spine k1 ... ks') instead of --form.")
@click.option('--out', 'out', type=click.Path(dir_okay=False), default=None,
              help="Output file; standard output when omitted.")
@handle_errors
def gen(family, n, d, k, seed, form, spine, out):
    """Generate an instance of FAMILY."""
    params = GenParams(family=family, n=n, d=d, k=k, seed=seed, form=form, spine=spine)
    instance = build_instance(params)
    flat = isinstance(instance, FlatConvexSet)
    if out:
        if flat:
            write_flat(instance, out)
        else:
            write_points(instance, out)
        logger.info(f"wrote {family} instance with {instance.n} points to {out}")
    else:
        for line in (flat_to_lines(instance) if flat else points_to_lines(instance)):
            click.echo(line)
