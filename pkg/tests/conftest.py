import pytest

from fracdiff.config import SimConfig


@pytest.fixture
def small_cfg():
    return SimConfig(gamma=0.6, alpha=1.0, beta=1.0, dt=0.02, dx=1.0, dy=1.0, nx=10, ny=10, n_steps=100, a=8)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
