# Copyright Cade Stocker 2026


class TestVerify:
    def test_constants(self, runner, cli):
        """The constants suite prints its checks and passes."""
        result = runner.invoke(cli, ['verify', 'constants'])
        assert result.exit_code == 0, result.stdout
        assert 'f value' in result.stdout
        assert '0.546723' in result.stdout
        assert result.stdout.strip().endswith('checks passed')

    def test_caterpillar(self, runner, cli):
        """Every caterpillar up to six edges is the unique optimum of its arc."""
        result = runner.invoke(cli, ['verify', 'caterpillar'])
        assert result.exit_code == 0, result.stdout
        assert 'False' not in result.stdout

    def test_small_random_suite(self, runner, cli):
        """--size and --seed override the configuration."""
        result = runner.invoke(cli, ['verify', 'diameter3', '--size', '3', '--seed', '5'])
        assert result.exit_code == 0, result.stdout
        assert '6/6 checks passed' in result.stdout

    def test_bad_size(self, runner, cli):
        """A non-positive size exits with code 2."""
        result = runner.invoke(cli, ['verify', 'convex', '--size', '0'])
        assert result.exit_code == 2

    def test_unknown_suite(self, runner, cli):
        """Unknown suites are usage errors."""
        assert runner.invoke(cli, ['verify', 'everything']).exit_code == 2

    def test_bad_seed_and_jobs(self, runner, cli):
        """Negative seeds and non-positive worker counts exit with code 2."""
        assert runner.invoke(cli, ['verify', 'convex', '--seed', '-1']).exit_code == 2
        assert runner.invoke(cli, ['verify', 'convex', '--jobs', '0']).exit_code == 2
