# Copyright Cade Stocker 2026


class TestRatio:
    def test_arc(self, runner, cli):
        """n = 10: optimum 55 against crossing 75."""
        result = runner.invoke(cli, ['ratio', 'arc', '--values', '10'])
        assert result.exit_code == 0, result.stderr
        assert 'n=10' in result.stdout
        assert '11/15' in result.stdout

    def test_diambound(self, runner, cli):
        """d = 2 and d = 3 give 13/14 and 29/30."""
        result = runner.invoke(cli, ['ratio', 'diambound', '--values', '2,3'])
        assert result.exit_code == 0, result.stderr
        assert '13/14' in result.stdout
        assert '29/30' in result.stdout

    def test_bad_values(self, runner, cli):
        """Non-positive values exit with code 2."""
        assert runner.invoke(cli, ['ratio', 'arc', '--values', '0']).exit_code == 2

    def test_cap_exceeded(self, runner, cli):
        """Constructions larger than the oracle cap exit with code 3."""
        result = runner.invoke(cli, ['ratio', 'p4k2', '--values', '2', '--cap', '8'])
        assert result.exit_code == 3
