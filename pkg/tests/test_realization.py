import pytest

from wtables.partitions import validate_orbit_partition
from wtables.realization import (CoordinatePyramid, NoSuchGenerator,
                                 NotNilpotent, Realization, mat_mul, mat_scale,
                                 mat_sub, zero_matrix)


def shape(parts, gtype):
    return validate_orbit_partition(parts, gtype)


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def test_pyramid_coordinates_type_c():
    k = CoordinatePyramid(shape((2, 2, 4, 5, 5), "C"))
    assert k.col[1] == -1 and k.col[2] == 1
    assert [k.col[i] for i in range(3, 8)] == [-4, -2, 0, 2, 4]
    assert k.row[8] == 0 and k.col[8] == -3
    assert k.col[-1] == -k.col[1] and k.row[-1] == -k.row[1]


def test_pyramid_type_b_middle_row_holds_zero():
    k = CoordinatePyramid(shape((3, 3, 5), "B"))
    assert k.row[0] == 0 and k.col[0] == 0


def test_jordan_type_values():
    r = Realization(shape((2, 2, 2), "C"))
    j3 = [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    assert r.jordan_type(j3) == (3,)
    assert r.jordan_type(zero_matrix(4)) == (1, 1, 1, 1)
    with pytest.raises(NotNilpotent):
        r.jordan_type([[1, 0], [0, 1]])


def test_nilpotent_has_the_orbit_jordan_type():
    for parts, gtype in [((2, 2, 4, 5, 5), "C"), ((3, 3, 5), "B"),
                         ((4, 4, 2), "C")]:
        r = Realization(shape(parts, gtype))
        assert r.jordan_type(r.build_e()) == r.shape.partition


def test_grading_element():
    for parts, gtype in [((4, 4, 2), "C"), ((3, 3, 5), "B")]:
        r = Realization(shape(parts, gtype))
        e, h = r.build_e(), r.build_h()
        assert commutator(h, e) == mat_scale(e, 2)
        assert r.in_algebra(e) and r.in_algebra(h)


def test_basis_elements_lie_in_the_algebra():
    r = Realization(shape((4, 4, 2), "C"))
    for i, j in r.f_basis_indices():
        assert r.in_algebra(r.f(i, j))
        assert r.grading_degree(i, j) == r.pyramid.col[j] - r.pyramid.col[i]


def test_generator_counts():
    assert Realization(shape((2, 4, 4), "C")).generator_parts() == [(1, 4)]
    assert Realization(shape((2, 2, 4, 5, 5), "C")).generator_parts() == [(1, 2)]
    assert Realization(shape((3, 3, 5), "B")).generator_parts() == [(1, 3)]


def test_component_generator_properties():
    for parts, gtype in [((4, 4, 2), "C"), ((3, 3, 5), "B")]:
        r = Realization(shape(parts, gtype))
        e = r.build_e()
        for k in range(1, len(r.generator_parts()) + 1):
            c = r.build_component_generator(k)
            assert commutator(c, e) == zero_matrix(r.dim)
            sq = mat_mul(c, c)
            assert all(sq[i][i] in (1, -1) for i in range(r.dim))
            assert all(sq[i][j] == 0 for i in range(r.dim)
                       for j in range(r.dim) if i != j)
    with pytest.raises(NoSuchGenerator):
        Realization(shape((4, 4, 2), "C")).build_component_generator(2)


def test_m_membership_predicate():
    r = Realization(shape((4, 4, 2), "C"))
    py = r.pyramid
    for i, j in r.f_basis_indices():
        assert r.in_m(i, j) == (py.col[i] > py.col[j])
