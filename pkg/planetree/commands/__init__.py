# Copyright Cade Stocker 2026
"""
The click command surface. Importing this package registers every
subcommand on the shared `cli` group.
"""

from planetree.commands._group import cli
from planetree.commands import gen, solve, verify, render, ratio
