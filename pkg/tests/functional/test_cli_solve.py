# Copyright Cade Stocker 2026
import pytest

from planetree.models.spantree import is_plane
from planetree.utils.fileio_utils import read_points, read_tree

TRIANGLE = "0 0\n4 0\n0 3\n"
SQUARE = "0 0\n1 0\n1 1\n0 1\n"
KITE = "0 0\n4 0\n0 4\n1 1\n"


def _summary(output):
    return dict(field.split('=', 1) for field in output.strip().splitlines()[-1].split())


# ====================
# Successful runs
# ====================

class TestSolve:
    def test_oracle_triangle(self, runner, cli, write_file):
        """Triangle minus its shortest side."""
        path = write_file('tri.txt', TRIANGLE)
        result = runner.invoke(cli, ['solve', path, '--algo', 'oracle'])
        assert result.exit_code == 0, result.stderr
        assert result.stdout.strip() == 'length=9.0 diameter=2 plane=true algo=oracle'

    def test_writes_tree(self, runner, cli, write_file, tmp_path):
        """--out receives a valid plane tree."""
        path = write_file('sq.txt', SQUARE)
        out = tmp_path / 'tree.txt'
        result = runner.invoke(cli, ['solve', path, '--algo', 'algsimple', '--out', str(out)])
        assert result.exit_code == 0, result.stderr
        ps = read_points(path)
        assert is_plane(read_tree(out, 4), ps)

    @pytest.mark.parametrize('algo', ['oracle', 'convex-dp', 'diam3', 'tristar', 'algsimple', 'alglocal'])
    def test_every_algorithm_on_square(self, runner, cli, write_file, algo):
        """Every algorithm reports a plane tree."""
        path = write_file('sq.txt', SQUARE)
        result = runner.invoke(cli, ['solve', path, '--algo', algo])
        assert result.exit_code == 0, result.stderr
        summary = _summary(result.stdout)
        assert summary['plane'] == 'true'
        assert summary['algo'] == algo

    def test_bistar_with_roots(self, runner, cli, write_file):
        """bistar takes its two roots from --roots."""
        path = write_file('kite.txt', KITE)
        result = runner.invoke(cli, ['solve', path, '--algo', 'bistar', '--roots', '0,1'])
        assert result.exit_code == 0, result.stderr
        assert int(_summary(result.stdout)['diameter']) <= 3

    def test_flat_convex_dp_exact(self, runner, cli, write_file):
        """The convex DP on the d = 3 arc reports 30 exactly."""
        path = write_file('d3.txt', "arc\n0\n1\n4\n8\n10\n")
        result = runner.invoke(cli, ['solve', path, '--algo', 'convex-dp'])
        assert result.exit_code == 0, result.stderr
        summary = _summary(result.stdout)
        assert summary['length'] == '30'
        assert summary['flat_length'] == '30'

    def test_flat_diam3_on_p4k2(self, runner, cli, tmp_path):
        """diam3 on the realized p4k2(1) twin has flat length 17."""
        path = tmp_path / 'twin.txt'
        runner.invoke(cli, ['gen', 'p4k2', '--k', '1', '--out', str(path)])
        result = runner.invoke(cli, ['solve', str(path), '--algo', 'diam3'])
        assert result.exit_code == 0, result.stderr
        assert _summary(result.stdout)['flat_length'] == '17'

    def test_alglocal_from_start(self, runner, cli, write_file):
        """alglocal improves a given starting tree."""
        path = write_file('sq.txt', SQUARE)
        start = write_file('start.txt', "0 1\n1 2\n2 3\n")
        result = runner.invoke(cli, ['solve', path, '--algo', 'alglocal', '--start', start])
        assert result.exit_code == 0, result.stderr
        assert float(_summary(result.stdout)['length']) == pytest.approx(3.414213562, abs=1e-6)

    def test_spine_out(self, runner, cli, write_file, tmp_path):
        """--spine-out records the caterpillar form of the tree found."""
        path = write_file('arc.txt', "arc\n0\n1\n4\n6\n")
        spine = tmp_path / 'best.cat'
        result = runner.invoke(cli, ['solve', path, '--algo', 'convex-dp', '--spine-out', str(spine)])
        assert result.exit_code == 0, result.stderr
        assert spine.read_text(encoding='utf-8').strip() == 'spine 1 1'

    @pytest.mark.parametrize('algo', ['diam3', 'tristar'])
    def test_jobs(self, runner, cli, write_file, algo):
        """--jobs spreads the root loops over worker processes without changing the answer."""
        path = write_file('kite.txt', KITE)
        serial = runner.invoke(cli, ['solve', path, '--algo', algo, '--jobs', '1'])
        pooled = runner.invoke(cli, ['solve', path, '--algo', algo, '--jobs', '2'])
        assert pooled.exit_code == 0, pooled.stderr
        assert pooled.stdout == serial.stdout


# ====================
# Exit code contract
# ====================

class TestSolveErrors:
    def test_parse_error_exit_1(self, runner, cli, write_file):
        """Malformed input exits with code 1."""
        path = write_file('bad.txt', "0 0\n1\n")
        result = runner.invoke(cli, ['solve', path, '--algo', 'oracle'])
        assert result.exit_code == 1
        assert 'bad.txt:2' in result.stderr

    def test_missing_file_exit_1(self, runner, cli, tmp_path):
        """A missing input file is a parse error."""
        result = runner.invoke(cli, ['solve', str(tmp_path / 'none.txt'), '--algo', 'oracle'])
        assert result.exit_code == 1

    def test_collinear_exit_2(self, runner, cli, write_file):
        """Degenerate input is a precondition failure."""
        path = write_file('line.txt', "0 0\n1 1\n2 2\n")
        result = runner.invoke(cli, ['solve', path, '--algo', 'oracle'])
        assert result.exit_code == 2
        assert 'collinear' in result.stderr

    def test_not_convex_exit_2(self, runner, cli, write_file):
        """The convex DP refuses interior points."""
        path = write_file('kite.txt', KITE)
        result = runner.invoke(cli, ['solve', path, '--algo', 'convex-dp'])
        assert result.exit_code == 2
        assert 'hull' in result.stderr

    def test_interior_root_exit_2(self, runner, cli, write_file):
        """Tristar roots must be hull vertices."""
        path = write_file('kite.txt', KITE)
        result = runner.invoke(cli, ['solve', path, '--algo', 'tristar', '--roots', '0,1,3'])
        assert result.exit_code == 2

    def test_missing_roots_exit_2(self, runner, cli, write_file):
        """bistar without roots, or with the wrong number, exits with code 2."""
        path = write_file('kite.txt', KITE)
        assert runner.invoke(cli, ['solve', path, '--algo', 'bistar']).exit_code == 2
        assert runner.invoke(cli, ['solve', path, '--algo', 'bistar', '--roots', '0,1,2']).exit_code == 2

    def test_crossing_start_exit_2(self, runner, cli, write_file):
        """Local search refuses a crossing starting tree."""
        path = write_file('sq.txt', SQUARE)
        start = write_file('start.txt', "0 2\n1 3\n0 1\n")
        assert runner.invoke(cli, ['solve', path, '--algo', 'alglocal', '--start', start]).exit_code == 2

    def test_cap_exit_3(self, runner, cli, write_file):
        """The oracle above its cap exits with code 3."""
        path = write_file('sq.txt', SQUARE)
        result = runner.invoke(cli, ['solve', path, '--algo', 'oracle', '--cap', '3'])
        assert result.exit_code == 3
        assert 'cap' in result.stderr

    def test_bad_jobs_exit_2(self, runner, cli, write_file):
        """A non-positive worker count exits with code 2."""
        path = write_file('kite.txt', KITE)
        assert runner.invoke(cli, ['solve', path, '--algo', 'diam3', '--jobs', '0']).exit_code == 2
