# Copyright Cade Stocker 2026
from config import DevelopmentConfig, ProductionConfig, TestingConfig, config
from planetree import create_cli


class TestConfig:
    def test_config_mapping(self):
        """Named configurations, with production as the default."""
        assert config['default'] is ProductionConfig
        assert TestingConfig.SUITE_SIZE == 8
        assert TestingConfig.LOG_LEVEL == 'WARNING'
        assert DevelopmentConfig.ORACLE_CAP == ProductionConfig.ORACLE_CAP

    def test_config_option(self, runner):
        """--config selects a configuration by name and unknown names fall back."""
        cli = create_cli('testing')
        result = runner.invoke(cli, ['--config', 'development', 'gen', 'arc', '--n', '2'])
        assert result.exit_code == 0, result.stderr
        result = runner.invoke(cli, ['--config', 'nonsense', 'gen', 'arc', '--n', '2'])
        assert result.exit_code == 0, result.stderr
        assert result.stdout.splitlines() == ['arc', '0 top', '1 top', '2 top']

    def test_help_lists_subcommands(self, runner):
        """Every subcommand is registered on the group."""
        result = runner.invoke(create_cli('testing'), ['--help'])
        assert result.exit_code == 0
        for name in ('gen', 'solve', 'verify', 'render', 'ratio'):
            assert name in result.stdout
