"""Shared fixtures: the worked-example tables and domino tableaux that anchor
the whole toolkit, plus small construction helpers."""

import pytest

from wtables.domino import DominoTableau
from wtables.partitions import validate_orbit_partition
from wtables.stables import SFrame, make_stable
from wtables.words import parse_word


def table(gtype, parts, rows):
    """An s-table on the identity frame of a validated shape."""
    shape = validate_orbit_partition(parts, gtype)
    return make_stable(SFrame.identity(shape), rows)


def rows_of(*rows):
    """Rows of exact entries, for comparing against pipeline stages."""
    return [parse_word(r) for r in rows]


@pytest.fixture(scope="session")
def golden_c():
    """The worked three-row type C pair: a column-strict table and its image
    under the component-group generator."""
    a = table("C", (4, 4, 2), [[2, 3, 4, 5], [-1, 1], [-5, -4, -3, -2]])
    ca = table("C", (4, 4, 2), [[-5, 2, 3, 4], [-1, 1], [-4, -3, -2, 5]])
    return a, ca


@pytest.fixture(scope="session")
def golden_b():
    """The worked three-row type B pair."""
    a = table("B", (3, 3, 5), [[-2, 5, 6], [-3, -1, 0, 1, 3], [-6, -5, 2]])
    ca = table("B", (3, 3, 5), [[-2, -1, 5], [-6, -3, 0, 3, 6], [-5, 1, 2]])
    return a, ca


@pytest.fixture(scope="session")
def golden_domino():
    """The worked domino tableaux: the slide-algorithm output for the word
    (-2,-3,1,0,-1,3,2), the reference tableau R with cycles {1} and {2,3},
    and the two moving-through images of R."""
    dt_result = DominoTableau.from_dominoes(
        {1: {(2, 1), (3, 1)}, 2: {(1, 2), (1, 3)}, 3: {(2, 2), (2, 3)}},
        zero_cell=True)
    r = DominoTableau.from_dominoes(
        {1: {(1, 1), (2, 1)}, 2: {(1, 2), (2, 2)}, 3: {(1, 3), (1, 4)}})
    mt1 = DominoTableau.from_dominoes(
        {1: {(2, 1), (3, 1)}, 2: {(1, 2), (2, 2)}, 3: {(1, 3), (1, 4)}},
        zero_cell=True)
    mt23 = DominoTableau.from_dominoes(
        {1: {(1, 1), (2, 1)}, 2: {(1, 2), (1, 3)}, 3: {(1, 4), (1, 5)}})
    return {"dt": dt_result, "r": r, "mt1": mt1, "mt23": mt23}
