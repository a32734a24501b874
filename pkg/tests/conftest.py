import pytest

from partfin.models.carrier import Carrier
from partfin.models.finseq import FinSeq
from partfin.models.marker import MarkerGrid, MarkerUniverse
from partfin.models.partition import SetPartition


def seq(*entries):
    return FinSeq(tuple(entries))


def part(size, *blocks):
    return SetPartition.from_blocks([list(b) for b in blocks], size, fill_singletons=True)


@pytest.fixture
def xyz():
    """Base {x, y, z} with four markers: x=0, y=1, z=2, m0..m3 = 3..6."""
    return MarkerUniverse(Carrier.named(["x", "y", "z"]), 4)


@pytest.fixture
def grid1():
    """n=1 grid a00..a22 on labels 0..8, plus x = 9."""
    return MarkerGrid.with_plain(1, ("x",))


@pytest.fixture
def grid2():
    """n=2 grid of 16 cells plus four plain elements."""
    return MarkerGrid.with_plain(2, ("x", "y", "z", "w"))
