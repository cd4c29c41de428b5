import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from pgn.canvas import Canvas, build_system

F = Fraction

# nine-row compact canvas exercising every transition shape
FIG1_ROWS = [
    (1, 2, 4), (2, 4, 5), (2, 5, 6), (2, 6, 8), (2, 8, 17),
    (2, 10, 17), (10, 13, 17), (13, 14, 17), (14, 17, 18),
]

FIG1_TRANSITIONS = [(1, 3), (2, 3), (2, 3), (2, 3), (2, 2), (1, 2), (1, 2), (1, 3)]

FIG1_SWITCH_NUMBERS = [7, 11, 13, 16, 27, 29, 40, 44, 49]

# bounded 4-canvas used by the extension worked example
EXT4_ROWS = [(1, 3, 9, 12), (1, 3, 12, 15), (1, 6, 12, 15), (6, 9, 12, 15)]


def rows(seq):
    return tuple(tuple(F(x) for x in row) for row in seq)


@pytest.fixture
def fig1_canvas():
    return Canvas(n=3, points=rows(FIG1_ROWS), mesh=F(1))


@pytest.fixture
def fig1_system(fig1_canvas):
    return build_system(fig1_canvas)


@pytest.fixture
def golden_canvas():
    return Canvas(n=3, points=rows([(1, 2, 4), (2, 4, 8)]), mesh=F(1),
                  periodic=(0, F(2)))


@pytest.fixture
def golden_system(golden_canvas):
    return build_system(golden_canvas)


@pytest.fixture
def ext4_canvas():
    return Canvas(n=4, points=rows(EXT4_ROWS), mesh=F(1))


@pytest.fixture
def ext4_system(ext4_canvas):
    return build_system(ext4_canvas)


GOLDEN_SIX = (F(1, 7), F(1, 4), F(2, 5), F(1, 4), F(2, 5), F(4, 7))
