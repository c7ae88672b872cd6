"""Acceptance battery: one test per criterion, exact arithmetic throughout.

Each test prints its ``[PASS]``/``[FAIL]`` line; the lines are repeated in
the pytest terminal summary.  Run directly with ``python tests/test_acceptance.py``
for the bare list.
"""
import sys

import pytest

from sl2bi.suite import CRITERIA, SuiteConfig, Tally, run_criterion, run_suite

ACCEPTANCE_LINES = []
# shared so the last criterion sees every triple built by the earlier ones
TALLY = Tally()


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    result = run_criterion(number, SuiteConfig(), TALLY)
    line = result.line()
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert result.passed, result.failure


if __name__ == "__main__":
    results = run_suite(SuiteConfig(), report=lambda r: print(r.line(), flush=True))
    sys.exit(0 if all(r.passed for r in results) else 1)
