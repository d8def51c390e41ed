import pytest

from conftest import table
from wtables.classify import (MethodDisagreement, classify, conjugacy_orbit,
                              is_finite_dimensional,
                              primitive_ideal_fingerprints)
from wtables.stables import is_cc, weight_of
from wtables.tau import tau_class


def test_verdicts_on_the_worked_pair(golden_c):
    a, ca = golden_c
    for t in (a, ca):
        assert is_finite_dimensional(t, "bv")
        assert is_finite_dimensional(t, "conjugacy")
        assert is_finite_dimensional(t, "both")


def test_verdict_on_a_perturbed_table():
    bad = table("C", (4, 4, 2), [[1, 1, 1, 1], [-1, 1], [-1, -1, -1, -1]])
    assert not is_finite_dimensional(bad, "bv")
    assert not is_finite_dimensional(bad, "conjugacy")
    with pytest.raises(ValueError):
        is_finite_dimensional(bad, "maybe")


def test_orbit_of_the_worked_pair(golden_c):
    a, ca = golden_c
    for strategy in ("oracle", "pipeline"):
        assert conjugacy_orbit(a, strategy) == frozenset({a, ca})
    assert [t for t in conjugacy_orbit(a) if is_cc(t)] == [a]


def test_classification_report_shape():
    rep = classify((4, 4, 2), "C", 2, "both")
    assert rep["counts"] == {"tables": 210, "finite_dimensional": 36,
                             "orbits": 24}
    assert rep["gtype"] == "C" and rep["partition"] == [4, 4, 2]
    sizes = sorted(len(o["tables"]) for o in rep["orbits"])
    assert set(sizes) <= {1, 2}
    assert sum(sizes) == 36
    for orb in rep["orbits"]:
        assert orb["representative"] in orb["tables"]
    # deterministic output
    assert classify((4, 4, 2), "C", 2, "both") == rep


def test_classification_type_b():
    rep = classify((3, 3, 5), "B", 2, "both")
    assert rep["counts"] == {"tables": 270, "finite_dimensional": 44,
                             "orbits": 30}


def test_classification_with_workers_matches_serial():
    serial = classify((4, 4, 2), "C", 2, "bv")
    sharded = classify((4, 4, 2), "C", 2, "bv", workers=2)
    assert serial == sharded


def test_fingerprints_are_distinct_and_orbit_stable(golden_c):
    fps = primitive_ideal_fingerprints((4, 4, 2), "C", 2)
    assert len(fps) == 24 and len(set(fps)) == 24
    a, ca = golden_c
    assert (tau_class(weight_of(a)).fingerprint
            == tau_class(weight_of(ca)).fingerprint)


def test_fingerprints_empty_below_any_column_strict_filling():
    # bound 0 leaves only the all-zero table, which is not column strict
    assert primitive_ideal_fingerprints((4, 4, 2), "C", 0) == []
