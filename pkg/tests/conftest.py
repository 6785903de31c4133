"""Shared fixtures."""
import pytest

from cyclolc.arith.numtheory import SequenceParams
from cyclolc.config import CycloConfig

# (p, f) pairs of the structural grid; m runs over 1 and 2
STRUCTURAL_GRID = [(5, 2), (5, 4), (7, 2), (11, 2), (13, 4), (17, 4), (17, 8)]


@pytest.fixture
def config():
    """Default configuration, independent of the environment."""
    return CycloConfig()


@pytest.fixture
def example1_params():
    """p=7, m=2, f=2, b=0, g=3."""
    return SequenceParams.build(7, 2, f=2, b=0, g=3)


@pytest.fixture
def example2_params():
    """p=5, m=2, f=2, b=0, g=3."""
    return SequenceParams.build(5, 2, f=2, b=0, g=3)


@pytest.fixture
def example2ii_params():
    """p=5, m=2, f=4, b=0, g=3."""
    return SequenceParams.build(5, 2, f=4, b=0, g=3)


@pytest.fixture
def example3_params():
    """p=31, m=1, e=15, b=0, g=3."""
    return SequenceParams.build(31, 1, e=15, b=0, g=3)


def structural_params():
    """Every (p, m, f) of the structural grid with the default primitive root."""
    return [SequenceParams.build(p, m, f=f) for p, f in STRUCTURAL_GRID for m in (1, 2)]
