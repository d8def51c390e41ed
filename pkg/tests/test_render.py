import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import table
from wtables.domino import DominoTableau, all_domino_tableaux, dt
from wtables.render import (parse_domino, parse_partition_text, parse_stable,
                            parse_tableau, parse_word_text, render_domino,
                            render_partition, render_stable, render_tableau,
                            render_word)
from wtables.words import parse_word, rs_insert


def test_word_round_trip():
    w = parse_word(["-3/2", "2", "0"])
    assert render_word(w) == "-3/2 2 0"
    assert parse_word_text(render_word(w)) == w


def test_partition_round_trip():
    assert render_partition((4, 2)) == "4,2"
    assert parse_partition_text("4,2") == (4, 2)
    assert parse_partition_text(render_partition((5, 5, 4, 2, 2))) == (5, 5, 4, 2, 2)


def test_tableau_rendering_draws_bottom_row_last():
    t = rs_insert([-2, -3, 1, 0, -1, 3, 2])
    assert render_tableau(t) == " 1\n-2  0  3\n-3 -1  2"
    assert parse_tableau(render_tableau(t)) == t


def test_stable_rendering(golden_c):
    a, _ = golden_c
    text = render_stable(a)
    assert text.splitlines()[0] == "type C  pairs 4  p0 2  order 1"
    assert parse_stable(text) == a
    with pytest.raises(ValueError):
        parse_stable("not a header\n1 2")


def test_stable_round_trip_preserves_frame_order(golden_b):
    a, _ = golden_b
    assert parse_stable(render_stable(a)) == a


def test_domino_rendering(golden_domino):
    r = golden_domino["r"]
    assert render_domino(r) == "\n".join([
        "+--+--+",
        "| 1| 2|",
        "+  +  +--+--+",
        "| 1| 2| 3  3|",
        "+--+--+--+--+",
    ])
    assert parse_domino(render_domino(r)) == r


def test_domino_round_trip_with_zero_cell(golden_domino):
    for r in golden_domino.values():
        assert parse_domino(render_domino(r)) == r


def test_empty_domino():
    empty = DominoTableau.from_dominoes({})
    assert render_domino(empty) == "++"
    assert parse_domino("++") == empty
    with pytest.raises(ValueError):
        parse_domino("nope")


def test_domino_round_trip_exhaustive_small_shapes():
    for shape in [(2, 2), (4, 2), (3, 2, 1), (2, 2, 1, 1), (5, 2)]:
        for r in all_domino_tableaux(shape):
            assert parse_domino(render_domino(r)) == r


words = st.lists(st.integers(-9, 9), min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(words)
def test_tableau_round_trip_property(w):
    t = rs_insert(w)
    assert parse_tableau(render_tableau(t)) == t
