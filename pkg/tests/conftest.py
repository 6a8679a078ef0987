"""
Pytest configuration for Lens Alexander tests.
"""

import os
import shutil
import tempfile

import pytest
from typer.testing import CliRunner

from lens_alexander.algebra.laurent import Ring
from lens_alexander.braids.parser import parse_braid
from lens_alexander.representations.burau import MixedColoring


@pytest.fixture
def ring_t():
    """Single-variable ring in ``t``."""
    return Ring(("t",))


@pytest.fixture
def ring_ab():
    """Two-variable ring in ``a`` and ``b``."""
    return Ring(("a", "b"))


@pytest.fixture
def ring_st():
    """The oracle's ring in ``s`` and ``t``."""
    return Ring(("s", "t"))


@pytest.fixture
def coloring():
    """Default coloring: ``a`` on the fixed strand, ``b`` on moving strands."""
    return MixedColoring.default()


@pytest.fixture
def printed_coloring():
    """Coloring with the roles swapped: ``b`` fixed, ``a`` moving."""
    return MixedColoring.named(fixed="b", moving="a")


@pytest.fixture
def trefoil_word():
    """``t s1^3`` in B_(1,2): a trefoil passing once around the surgery curve."""
    return parse_braid("t s1^3", 2)


@pytest.fixture
def runner():
    """Fixture for creating a CLI runner."""
    return CliRunner()


@pytest.fixture
def temp_dir():
    """Fixture for creating a temporary directory."""
    temp_dir = tempfile.mkdtemp()
    yield temp_dir
    shutil.rmtree(temp_dir)


@pytest.fixture
def batch_file(temp_dir):
    """Factory writing a batch input file and returning its path."""

    def _write(*lines):
        path = os.path.join(temp_dir, "words.txt")
        with open(path, "w", encoding="utf-8") as f:
            f.write("\n".join(lines) + "\n")
        return path

    return _write
