# Shared fixtures for the harmonia test suite.  Every random draw in the
# tests comes from a generator seeded here.

import numpy as np
import pytest

from harmonia.settings import conf


@pytest.fixture
def rng():
    return np.random.default_rng(conf.seed)


@pytest.fixture
def quiet_log():
    """A Logging instance that only reports errors."""
    from harmonia.WorkbenchLogging import Logging
    return Logging(verbose=2, prefix='harmonia-test')
