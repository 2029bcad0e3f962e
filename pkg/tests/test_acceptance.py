"""Acceptance gate: every named verification check must pass.

Each check is one test so the report shows one pass/fail line per criterion.
"""

import pytest

from tropvertex.verify import CHECKS


@pytest.mark.parametrize("name", list(CHECKS), ids=list(CHECKS))
def test_acceptance(name):
    CHECKS[name]()
