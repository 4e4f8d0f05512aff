# Copyright Cade Stocker 2026
import logging
import os

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def create_cli(config_name=None):
    """
    Build the planetree command group.

    The configuration class comes from `config_name`, else PLANETREE_CONFIG,
    else the default; `--config` on the command line still overrides it.
    """
    from config import config

    name = config_name or os.environ.get('PLANETREE_CONFIG', 'default')
    cfg = config.get(name, config['default'])
    logging.basicConfig(level=getattr(logging, str(cfg.LOG_LEVEL).upper(), logging.INFO), format=LOG_FORMAT)

    # Import the command package so every subcommand registers on `cli`
    # Important: do this INSIDE create_cli to avoid circular imports
    from planetree.commands import cli

    cli.context_settings['obj'] = cfg
    return cli
