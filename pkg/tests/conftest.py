import pytest
from hypothesis import settings

settings.register_profile("sl2bi", deadline=None, max_examples=60, derandomize=True)
settings.load_profile("sl2bi")


@pytest.fixture
def pure_python(monkeypatch):
    """Route every kernel call through the pure-Python implementation."""
    from sl2bi.exactlinalg import _kernels_py, linalg, matrix

    monkeypatch.setattr(linalg, "kernels", _kernels_py)
    monkeypatch.setattr(matrix, "kernels", _kernels_py)
    return _kernels_py


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import ACCEPTANCE_LINES

    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
