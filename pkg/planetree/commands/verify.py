# Copyright Cade Stocker 2026
import logging

import click

from planetree.commands._group import cli, handle_errors, settings
from planetree.schemas import RunConfig
from planetree.utils.suite_utils import SUITES, checks_frame, run_suite

logger = logging.getLogger(__name__)


@cli.command('verify')
@click.argument('suite', type=click.Choice(SUITES))
@click.option('--seed', type=int, default=None, help="Base seed of the random instances.")
@click.option('--size', type=int, default=None, help="Number of random instances.")
@click.option('--jobs', type=int, default=None, help="Worker processes.")
@handle_errors
def verify(suite, seed, size, jobs):
    """Run a verification SUITE and print every check; exit 1 if any fails."""
    cfg = settings()
    run = RunConfig(
        subcommand='verify',
        seed=cfg.SUITE_SEED if seed is None else seed,
        size=cfg.SUITE_SIZE if size is None else size,
        jobs=cfg.JOBS if jobs is None else jobs,
    )

    checks = run_suite(suite, run.seed, run.size, run.jobs)
    click.echo(checks_frame(checks).to_string(index=False))
    failed = [c for c in checks if not c.passed]
    click.echo(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    if failed:
        logger.error(f"suite {suite}: {len(failed)} checks failed")
        raise SystemExit(1)
