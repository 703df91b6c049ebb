from __future__ import annotations

import numpy as np
import pytest

import trigapprox


@pytest.fixture(params=trigapprox.available_backends())
def backend(request):
    """Run a test once per available backend."""
    prev = trigapprox.use_backend(request.param)
    yield request.param
    trigapprox.use_backend(prev)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
