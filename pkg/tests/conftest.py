"""Shared fixtures for the pairing_functions test suite."""

import json
from pathlib import Path
from typing import Any, Dict

import pytest

from pairing_functions.pairing_core import MonotoneSource

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def figures() -> Dict[str, Any]:
    """Point tables read off the published figures.

    Integer-plane figures are lists of [x, y, z]; curve figures list the
    points visited in order.
    """
    with open(DATA_DIR / "figures.json", "r", encoding="utf-8") as f:
        return json.load(f)


def make_figure_source() -> MonotoneSource:
    """g(0..6) = 0, 1, 1, 1, 3, 4, 4 and g(x) = x - 2 afterwards."""
    return MonotoneSource.from_table(
        [0, 1, 1, 1, 3, 4, 4], lambda x: x - 2, "figure g"
    )


@pytest.fixture
def figure_source() -> MonotoneSource:
    """The non-decreasing unbounded g drawn in the generic pairing figure."""
    return make_figure_source()


@pytest.fixture
def json_file(tmp_path: Path):
    """Write a JSON document to a temporary file and return its path."""

    def write(content: str, name: str = "document.json") -> str:
        path = tmp_path / name
        path.write_text(content, encoding="utf-8")
        return str(path)

    return write
