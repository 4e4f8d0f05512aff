# Copyright Cade Stocker 2026
"""
`planetree ratio`: constrained against unconstrained optima of the lower
bound constructions, as exact fractions and floats.

    arc        plane optimum / crossing optimum of the evenly spaced arc, per n
    diambound  best diameter <= d tree / plane optimum, per d
    p4k2       best diameter <= 3 tree / plane optimum, per k
"""

import logging
from fractions import Fraction

import click
import pandas as pd

from planetree.algorithms.convexopt import longest_plane_tree_convex
from planetree.algorithms.generators import arc_Pn, arc_crossing_tree, bound_report
from planetree.commands._group import cli, handle_errors, settings
from planetree.models.flatconvex import flat_length
from planetree.schemas import CONSTRUCTIONS, RatioParams

logger = logging.getLogger(__name__)


def ratio_rows(params: RatioParams):
    rows = []
    for value in params.value_list():
        if params.construction == 'arc':
            f = arc_Pn(value)
            constrained = flat_length(longest_plane_tree_convex(f), f)
            unconstrained = flat_length(arc_crossing_tree(value), f)
            param = f"n={value}"
        else:
            key = 'd' if params.construction == 'diambound' else 'k'
            report = bound_report(params.construction, {key: value}, cap=params.cap)
            constrained, unconstrained = report.constrained, report.optimum
            param = f"{key}={value}"
        ratio = Fraction(constrained, unconstrained)
        rows.append({
            'construction': params.construction,
            'param': param,
            'constrained': constrained,
            'unconstrained': unconstrained,
            'ratio': str(ratio),
            'value': float(ratio),
        })
    return pd.DataFrame(rows, columns=['construction', 'param', 'constrained', 'unconstrained', 'ratio', 'value'])


@cli.command('ratio')
@click.argument('construction', type=click.Choice(CONSTRUCTIONS))
@click.option('--values', required=True, help="Comma separated parameter values, e.g. '10,50,100'.")
@click.option('--cap', type=int, default=None, help="Oracle size cap for the constrained optimum.")
@handle_errors
def ratio(construction, values, cap):
    """Tabulate the bound ratios of CONSTRUCTION."""
    params = RatioParams(construction=construction, values=values,
                         cap=settings().ORACLE_CAP if cap is None else cap)
    table = ratio_rows(params)
    click.echo(table.to_string(index=False))
