"""Test configuration and fixtures."""

import os

import pytest
from click.testing import CliRunner

os.environ.setdefault("NEGTRANS_CONFIG", "testing")

from negtrans.config import TestingConfig  # noqa: E402
from negtrans.kernel import Kernel  # noqa: E402
from negtrans.parser import parse  # noqa: E402
from negtrans.utils.log_manager import LogManager  # noqa: E402


@pytest.fixture(scope="session")
def testing_config():
    """Small corpora and tight bounds."""
    return TestingConfig()


@pytest.fixture(scope="session")
def kernel(testing_config):
    """One memoizing kernel for the whole session."""
    return Kernel.from_config(testing_config)


@pytest.fixture
def fresh_kernel(testing_config):
    return Kernel.from_config(testing_config)


@pytest.fixture
def f():
    """Shorthand for parsing formula text."""
    return parse


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def log_manager(tmp_path):
    """A log manager writing to a temporary directory."""
    return LogManager(log_dir=tmp_path / "logs", level="DEBUG")
