import pytest

from wtables.domino import (DominoTableau, InvalidDominoTableau, NotACycle,
                            OddBoxCount, Undefined, all_domino_tableaux,
                            cycles, d_prime, dt, find_cycle_path, fixed_square,
                            garfinkle, move_through, move_through_seq, part)
from wtables.partitions import content, is_domino_shape
from wtables.words import rs_insert


def test_slide_algorithm_golden(golden_domino):
    assert dt(rs_insert([-2, -3, 1, 0, -1, 3, 2])) == golden_domino["dt"]


def test_slide_algorithm_small_cases():
    horizontal = dt([[-1, 1]])
    assert horizontal.domino_map == {1: frozenset({(1, 1), (1, 2)})}
    vertical = dt(rs_insert([1, -1]))
    assert vertical.domino_map == {1: frozenset({(1, 1), (2, 1)})}
    assert not vertical.zero_cell


def test_slide_algorithm_undefined_cases():
    with pytest.raises(Undefined):
        dt([[-2, -1, 2, 1]])  # -2 ends next to 1
    with pytest.raises(Undefined):
        dt([[1, 2], [1, -1]])  # repeated entries (not reaching -2)
    with pytest.raises(Undefined):
        dt([[-2, 1, 3]])  # not a signed labelling


def test_fixed_squares():
    # even box count: (i, j) fixed iff i + j odd; odd box count flips
    assert not fixed_square(6, 1, 1) and fixed_square(6, 1, 2)
    assert fixed_square(7, 1, 1) and not fixed_square(7, 1, 2)


def test_shifted_dominoes(golden_domino):
    r = golden_domino["r"]
    assert d_prime(r, 1)[0] == frozenset({(2, 1), (3, 1)})
    assert d_prime(r, 2)[0] == frozenset({(1, 2), (1, 3)})
    assert d_prime(r, 3)[0] == frozenset({(1, 4), (1, 5)})
    # all three E squares here touch the quadrant boundary
    assert all(d_prime(r, k)[2] == -1 for k in (1, 2, 3))


def test_cycles_golden(golden_domino):
    r = golden_domino["r"]
    assert cycles(r) == frozenset({frozenset({1}), frozenset({2, 3})})


def test_moving_through_golden(golden_domino):
    r = golden_domino["r"]
    assert move_through(r, {1}) == golden_domino["mt1"]
    assert move_through(r, {2, 3}) == golden_domino["mt23"]
    assert golden_domino["mt1"].zero_cell
    assert part(golden_domino["mt1"]) == (4, 2, 1)
    assert part(golden_domino["mt23"]) == (5, 1)


def test_moving_through_errors(golden_domino):
    r = golden_domino["r"]
    with pytest.raises(NotACycle):
        move_through(r, {2})
    with pytest.raises(OddBoxCount):
        move_through(golden_domino["mt1"], {1})


def test_moving_through_sequence(golden_domino):
    r = golden_domino["r"]
    assert move_through_seq(r, []) == r
    assert move_through_seq(r, [{1}]) == golden_domino["mt1"]


def test_find_cycle_path(golden_domino):
    r = golden_domino["r"]
    assert find_cycle_path(r, r) == []
    path = find_cycle_path(r, golden_domino["mt23"])
    assert path == [frozenset({2, 3})]
    assert move_through_seq(r, path) == golden_domino["mt23"]


def test_signed_permutation_front_ends():
    w = (1, -2)
    doubled = w + (2, -1)
    zero = w + (0,) + (2, -1)
    assert garfinkle(doubled, "G0") == dt(rs_insert(doubled))
    assert garfinkle(zero, "G1") == dt(rs_insert(zero))
    with pytest.raises(Undefined):
        garfinkle((1, 2, -1, -2), "G1")  # missing the 0
    with pytest.raises(ValueError):
        garfinkle(doubled, "G2")


def test_exhaustive_generation_counts():
    counts = {(2, 2): 2, (2, 1, 1): 1, (3, 1): 1, (4, 2): 3, (1,): 1,
              (2, 1): 0}
    for shape, expect in counts.items():
        assert sum(1 for _ in all_domino_tableaux(shape)) == expect
        if expect:
            assert is_domino_shape(shape)


def test_generated_tableaux_are_valid():
    for r in all_domino_tableaux((3, 2, 1)):
        assert part(r) == (3, 2, 1)
        assert r.zero_cell == (sum((3, 2, 1)) % 2 == 1)


def test_content_is_preserved_by_moving_through():
    for r in all_domino_tableaux((4, 2)):
        for c in cycles(r):
            assert content(part(move_through(r, c))) == content(part(r))


def test_invalid_tableaux_are_rejected():
    with pytest.raises(InvalidDominoTableau):
        DominoTableau.from_dominoes({1: {(1, 1), (1, 3)}})  # not adjacent
    with pytest.raises(InvalidDominoTableau):
        DominoTableau.from_dominoes({1: {(1, 1), (1, 2)},
                                     2: {(1, 2), (1, 3)}})  # overlap
    with pytest.raises(InvalidDominoTableau):
        DominoTableau.from_dominoes({1: {(2, 1), (2, 2)}})  # floating row
    with pytest.raises(InvalidDominoTableau):
        DominoTableau.from_dominoes({2: {(1, 1), (1, 2)},
                                     1: {(1, 3), (1, 4)}})  # row decreases
    with pytest.raises(InvalidDominoTableau):
        DominoTableau.from_dominoes({0: {(1, 1), (1, 2)}})  # label 0


def test_json_round_trip(golden_domino):
    for r in golden_domino.values():
        assert DominoTableau.from_json(r.to_json()) == r
