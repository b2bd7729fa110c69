import numpy as np
import pytest

from warpvdf.prototype import FilterSpec, design_bandpass

# design-example prototype: 0.14 center, 0.02 bandwidth, 0.002 dB ripple, 90 dB + 10 dB CDM margin
EXAMPLE_SPEC = FilterSpec(0.14, 0.02, 0.002, 100.0, 0.02)


@pytest.fixture(scope="session")
def example_proto():
    return design_bandpass(EXAMPLE_SPEC)


@pytest.fixture(scope="session")
def proto_90():
    return design_bandpass(FilterSpec(0.14, 0.02, 0.002, 90.0, 0.02))


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def pytest_terminal_summary(terminalreporter):
    from .test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
