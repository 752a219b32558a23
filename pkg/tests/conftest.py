from fractions import Fraction

import pytest

from shufflesym.symmetric import ShuffleParams
from shufflesym.verify import BATTERY

F = Fraction


@pytest.fixture(params=list(BATTERY), ids=list(BATTERY))
def battery_params(request) -> ShuffleParams:
    return BATTERY[request.param]


# a wider set for the cheaper exact checks: adds a pure reversal and a two-sided case
EXTRA = {
    "reversal": ShuffleParams(beta=(F(1),)),
    "two-sided": ShuffleParams(alpha=(F(1, 4), F(1, 4)), beta=(F(1, 4), F(1, 4))),
}


@pytest.fixture(params=list(BATTERY) + list(EXTRA))
def wide_params(request) -> ShuffleParams:
    return {**BATTERY, **EXTRA}[request.param]


def pytest_terminal_summary(terminalreporter):
    import sys

    lines = [line for name, mod in list(sys.modules.items())
             if name.endswith("test_acceptance") for line in getattr(mod, "RESULTS", [])]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
