from __future__ import annotations

import os
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mmpts import reference as ref  # noqa: E402
from mmpts.acceptance import Suite  # noqa: E402
from mmpts.codec import decode  # noqa: E402
from mmpts.pipeline import enumerate_designs  # noqa: E402

from oracles import parse_hex  # noqa: E402


def pytest_collection_modifyitems(config, items):
    if os.environ.get("MMPTS_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended run; set MMPTS_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def suite() -> Suite:
    """One shared acceptance suite, so each order is enumerated once per session."""
    return Suite(trials=1000)


@pytest.fixture(scope="session")
def design_q():
    return parse_hex(11, ref.TABLE1_Q)


@pytest.fixture(scope="session")
def design_n():
    return parse_hex(11, ref.TABLE1_N)


@pytest.fixture(scope="session")
def mmpts12():
    return [decode(row[0], 12) for row in ref.MMPTS12]


@pytest.fixture(scope="session")
def small_corpora():
    """Class representatives for v = 3..13, computed directly."""
    return {v: enumerate_designs(v).designs() for v in range(3, 14)}
