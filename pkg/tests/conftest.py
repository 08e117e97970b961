from fractions import Fraction

import pytest
from hypothesis import settings

from permutokit.kinematics import ConstantMatrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def hexagon_D():
    """The worked example (c12, c23, c13) = (2, 1, 3)."""
    return ConstantMatrix.from_pairs(3, {(1, 2): 2, (2, 3): 1, (1, 3): 3})


def F(*args):
    return Fraction(*args)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
