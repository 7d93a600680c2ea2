"""Acceptance gate: one test per criterion, at the stated tolerances.

Each check prints a PASS/FAIL line (collected in the terminal summary).  Criteria
the mathematics does not support fail here on purpose; nothing is relaxed.
"""
import pytest

from glnsw.acceptance import CHECKS

RESULTS = []


@pytest.mark.parametrize("number", sorted(CHECKS), ids=lambda n: f"criterion_{n:02d}")
def test_criterion(number):
    result = CHECKS[number]()
    RESULTS.append(result)
    print(result.line())
    assert result.passed, result.line()
