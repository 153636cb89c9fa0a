import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from gaussmig.gint import GaussianInt as G  # noqa: E402
from gaussmig.scheme import SchemeParams  # noqa: E402

# criterion label -> "PASS"/"FAIL", filled by test_acceptance
ACCEPTANCE_RESULTS: dict[str, str] = {}


@pytest.fixture
def example1_params():
    # the earlier scheme's moduli with bounds re-derived for the corrected scheme
    return SchemeParams((G(7, 4), G(-3, -13), G(11, 8)), 185, 11570)


@pytest.fixture
def ej2_params():
    return SchemeParams((G(15, 14), G(10, -18), G(13, 16)), 425, 178504)


@pytest.fixture
def weighted_params():
    return SchemeParams((G(6, 5), G(1, -9), G(13, 16)), 5002, 25925)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(ACCEPTANCE_RESULTS, key=lambda s: int(s.split()[0])):
        terminalreporter.write_line(f"{ACCEPTANCE_RESULTS[label]}  {label}")
