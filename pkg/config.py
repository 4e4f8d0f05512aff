# Copyright Cade Stocker 2026

"""
Configuration module for the planetree toolkit. This module defines the configuration classes for different environments
(development, production, testing) and loads environment variables using python-dotenv.

The values here are defaults for the command line: every one of them can be overridden per run with the matching flag.
"""

import os
from dotenv import load_dotenv

load_dotenv()


class Config:
    """Base configuration"""
    LOG_LEVEL = os.environ.get('PLANETREE_LOG_LEVEL', 'INFO')

    # Oracle enumeration refuses inputs larger than this unless overridden
    ORACLE_CAP = int(os.environ.get('PLANETREE_ORACLE_CAP', '10'))

    # Height of the bump used when a flat set is embedded in the plane
    FLAT_EPS = float(os.environ.get('PLANETREE_EPS', '1e-6'))

    JOBS = int(os.environ.get('PLANETREE_JOBS', '1'))

    # Verification suites draw their random instances from this seed
    SUITE_SEED = int(os.environ.get('PLANETREE_SUITE_SEED', '2024'))
    SUITE_SIZE = int(os.environ.get('PLANETREE_SUITE_SIZE', '100'))


class DevelopmentConfig(Config):
    """Development configuration"""
    LOG_LEVEL = os.environ.get('PLANETREE_LOG_LEVEL', 'DEBUG')


class ProductionConfig(Config):
    """Production configuration"""
    LOG_LEVEL = os.environ.get('PLANETREE_LOG_LEVEL', 'INFO')


class TestingConfig(Config):
    """Testing configuration"""
    LOG_LEVEL = 'WARNING'
    ORACLE_CAP = 10
    SUITE_SIZE = 8


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}
