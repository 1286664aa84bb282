"""One test per acceptance criterion; each prints a single pass/fail line."""

import pytest

from caputo_eit import acceptance

from conftest import ACCEPTANCE_LINES


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number):
    res = acceptance.CRITERIA[number - 1]()
    print(res.line())
    ACCEPTANCE_LINES.append(res.line())
    assert res.number == number
    assert res.passed, res.line()
