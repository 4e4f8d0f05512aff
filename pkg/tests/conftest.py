# Copyright Cade Stocker 2026
import pytest
import os
import sys

# Add parent directory to path so we can import planetree and config
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from click.testing import CliRunner

from planetree import create_cli
from planetree.models import FlatConvexSet, PointSet


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: full scans of the nine-point set; deselect with -m "not slow"')


@pytest.fixture
def triangle():
    """Right triangle with sides 3, 4 and 5."""
    return PointSet([(0, 0), (4, 0), (0, 3)])


@pytest.fixture
def square():
    """Unit square, counterclockwise from the origin."""
    return PointSet([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def kite():
    """Triangle with one interior point (index 3)."""
    return PointSet([(0, 0), (4, 0), (0, 4), (1, 1)])


@pytest.fixture
def heptagon():
    """Seven points in convex position along an upper arc."""
    return PointSet([(0, 0), (1, 3), (3, 5), (6, 6), (9, 5), (11, 3), (12, 0)])


@pytest.fixture
def small_arc():
    """Flat arc with gaps 1, 3, 2."""
    return FlatConvexSet([0, 1, 4, 6])


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def cli():
    """The command group under the testing configuration."""
    return create_cli('testing')


@pytest.fixture
def write_file(tmp_path):
    """Write text to a file under tmp_path and return its path as a string."""
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return str(path)
    return _write
