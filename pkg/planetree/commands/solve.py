# Copyright Cade Stocker 2026
"""
`planetree solve`: run one algorithm on a point or flat file.

The oracle and the convex DP work on flat sets directly in exact integer
arithmetic. Every other algorithm needs coordinates, so flat input is first
realized with a small bump of height eps; the summary then carries both the
geometric length and the flat length of the same tree.
"""

import logging

import click

from planetree.algorithms.approx import alg_simple
from planetree.algorithms.bistar import longest_diameter3_tree, longest_plane_bistar
from planetree.algorithms.convexopt import caterpillar_canonical_form, longest_plane_tree_convex
from planetree.algorithms.localsearch import alg_local
from planetree.algorithms.oracle import longest_plane_tree_bruteforce
from planetree.algorithms.tristar import best_tristar_over_hull_triples, longest_plane_tristar
from planetree.commands._group import cli, handle_errors, settings
from planetree.errors import NotPlaneError, PreconditionError
from planetree.models.flatconvex import FlatConvexSet, flat_length, realize
from planetree.models.spantree import hop_diameter, is_plane, tree_length
from planetree.schemas import ALGORITHMS, SolveParams
from planetree.utils.fileio_utils import read_instance, read_tree, write_caterpillar, write_tree

logger = logging.getLogger(__name__)

# algorithms that run on a flat set without realizing it
EXACT_ON_FLAT = ('oracle', 'convex-dp')


def _roots(params: SolveParams, count: int):
    roots = params.root_indices()
    if roots is None:
        return None
    if len(roots) != count:
        raise PreconditionError(f"{params.algo} needs exactly {count} roots, got {len(roots)}")
    return roots


def run_algorithm(params: SolveParams, instance):
    """The tree `params.algo` computes on `instance`."""
    algo = params.algo
    if algo == 'oracle':
        return longest_plane_tree_bruteforce(instance, cap=params.cap).best_tree
    if algo == 'convex-dp':
        return longest_plane_tree_convex(instance)
    if algo == 'bistar':
        roots = _roots(params, 2)
        if roots is None:
            raise PreconditionError("bistar needs --roots a,b")
        return longest_plane_bistar(instance, *roots)
    if algo == 'diam3':
        return longest_diameter3_tree(instance, jobs=params.jobs)
    if algo == 'tristar':
        roots = _roots(params, 3)
        if roots is None:
            return best_tristar_over_hull_triples(instance, jobs=params.jobs)
        return longest_plane_tristar(instance, *roots)
    if algo == 'algsimple':
        return alg_simple(instance)
    start = read_tree(params.start, instance.n) if params.start else alg_simple(instance)
    tree, trace = alg_local(instance, start)
    logger.info(f"local search made {len(trace)} swaps from length {trace.start_length}")
    return tree


def _fmt(length) -> str:
    return str(length) if isinstance(length, int) else repr(float(length))


@cli.command('solve')
@click.argument('input_path', metavar='INPUT', type=click.Path(dir_okay=False))
@click.option('--algo', type=click.Choice(ALGORITHMS), required=True)
@click.option('--out', 'out', type=click.Path(dir_okay=False), default=None, help="Write the tree edges here.")
@click.option('--roots', default=None, help="Root indices for bistar (a,b) or tristar (a,b,c).")
@click.option('--start', type=click.Path(dir_okay=False), default=None,
              help="Starting tree for alglocal; the approximation tree when omitted.")
@click.option('--spine-out', 'spine_out', type=click.Path(dir_okay=False), default=None,
              help="Write the caterpillar form of the tree here; the tree must be a caterpillar.")
@click.option('--eps', type=float, default=None, help="Realization height for flat input.")
@click.option('--cap', type=int, default=None, help="Oracle size cap.")
@click.option('--jobs', type=int, default=None, help="Worker processes for the root pair and hull triple loops.")
@handle_errors
def solve(input_path, algo, out, roots, start, spine_out, eps, cap, jobs):
    """Compute a long plane spanning tree of INPUT."""
    cfg = settings()
    params = SolveParams(
        input=input_path, algo=algo, output=out, roots=roots, start=start, spine_output=spine_out,
        eps=cfg.FLAT_EPS if eps is None else eps,
        cap=cfg.ORACLE_CAP if cap is None else cap,
        jobs=cfg.JOBS if jobs is None else jobs,
    )
    instance = read_instance(params.input)
    flat = instance if isinstance(instance, FlatConvexSet) else None
    if flat is not None and params.algo not in EXACT_ON_FLAT:
        instance = realize(flat, params.eps)

    tree = run_algorithm(params, instance)
    if not is_plane(tree, instance):
        raise NotPlaneError(f"{params.algo} produced a crossing tree")
    form = caterpillar_canonical_form(tree) if params.spine_output else None
    if params.output:
        write_tree(tree, params.output)
    if form is not None:
        write_caterpillar(form, params.spine_output)

    summary = (f"length={_fmt(tree_length(tree, instance))} diameter={hop_diameter(tree)} "
               f"plane=true algo={params.algo}")
    if flat is not None:
        summary += f" flat_length={flat_length(tree, flat)}"
    click.echo(summary)
