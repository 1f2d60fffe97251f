import random
import sys

import pytest

from whmilnor.parser import parse_polynomial
from whmilnor.poly import WeightSystem

XY = ("x", "y")
XYZ = ("x", "y", "z")


def P(text, variables=XY):
    return parse_polynomial(text, variables)


def W(weights, variables=None):
    variables = variables or ("x", "y", "z", "w")[:len(weights)]
    return WeightSystem(tuple(variables), tuple(weights))


@pytest.fixture
def rng():
    return random.Random(20240521)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.RESULTS:
        terminalreporter.write_line(line)
