# Copyright Cade Stocker 2026
import functools
import logging
import sys

import click
from pydantic import ValidationError

from config import config as config_classes
from planetree.errors import PlaneTreeError, PreconditionError

logger = logging.getLogger(__name__)

# The single 'cli' group shared by all subcommand modules.
# Kept in its own file to avoid circular imports: sub-modules import
# from here, and planetree/__init__.py also imports from here.


@click.group()
@click.option('--config', 'config_name', envvar='PLANETREE_CONFIG', default=None,
              help="Configuration name: development, production or testing.")
@click.pass_context
def cli(ctx, config_name):
    """Longest plane spanning trees: solve, generate, verify, render."""
    if ctx.obj is None or config_name:
        ctx.obj = config_classes.get(config_name or 'default', config_classes['default'])


def settings():
    """The configuration class of the running command."""
    ctx = click.get_current_context(silent=True)
    if ctx is None or ctx.find_root().obj is None:
        return config_classes['default']
    return ctx.find_root().obj


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def handle_errors(f):
    """Map library exceptions to the exit code contract: 1 parse, 2 precondition, 3 cap."""
    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except PlaneTreeError as e:
            logger.error(f"{f.__name__}: {e}")
            _fail(str(e), e.exit_code)
        except ValidationError as e:
            first = e.errors()[0]
            message = first.get('msg', str(e))
            logger.error(f"{f.__name__}: invalid parameters: {message}")
            _fail(message, PreconditionError.exit_code)
        except (ValueError, IndexError) as e:
            logger.error(f"{f.__name__}: {e}")
            _fail(str(e), PreconditionError.exit_code)
    return wrapper
