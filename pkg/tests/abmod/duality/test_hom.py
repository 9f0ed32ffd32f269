from fractions import Fraction

import pytest

from abmod.constructors import e_lambda, jordan_module
from abmod.core import is_simple_pole
from abmod.duality import e_delta, hom_ab, hom_basis, twist, verify_twist_hom
from abmod.duality.hom import map_to_vector, vector_to_map
from abmod.series import parse_series


def entries(module):
    return [[str(x) for x in row] for row in module.a_matrix.rows]


def test_e_delta():
    module = e_delta(2, trunc=10)
    assert entries(module) == [["2*b"]]
    assert module.trunc == 10


def test_twist():
    assert twist(e_lambda(3)).a_matrix == e_lambda(3).a_matrix
    assert entries(twist(pytest.e2)) == [["0", "-b^2"], ["-1", "0"]]
    assert twist(pytest.e2).name == "E2^v"
    module = pytest.jordan_perturbed
    assert twist(twist(module)).a_matrix == module.a_matrix


def test_hom_of_rank_one_modules():
    hom = hom_ab(e_lambda(1), e_lambda(Fraction(5, 2)))
    assert entries(hom) == [["3/2*b"]]
    assert hom.name == "Hom(E_1,E_5/2)"


def test_hom_into_dualizing_module():
    hom = hom_ab(pytest.e2, e_delta(0, trunc=pytest.e2.trunc))
    assert entries(hom) == [["0", "-1"], ["-b^2", "0"]]


def test_hom_shape_and_basis_order():
    source, target = pytest.pham_3_3, pytest.e2
    hom = hom_ab(source, target)
    assert hom.rank == 8
    basis = hom_basis(source, target)
    assert len(basis) == 8
    # phi_ij maps e_j to e_i and has index i * rank(source) + j
    unit = basis[1 * 4 + 2]
    assert str(unit[1, 2]) == "1"
    assert sum(not x.is_zero() for row in unit.rows for x in row) == 1


def test_vector_map_round_trip():
    trunc = 6
    vector = tuple(parse_series(x, trunc) for x in ["1", "b", "0", "b^2", "2", "0"])
    matrix = vector_to_map(vector, 3, 2)
    assert matrix.shape == (2, 3)
    assert str(matrix[1, 0]) == "b^2"
    assert map_to_vector(matrix) == vector
    with pytest.raises(ValueError):
        vector_to_map((), 0, 0)


def test_twist_commutes_with_hom():
    modules = [
        pytest.e2,
        pytest.jordan_perturbed,
        e_lambda(Fraction(1, 3), trunc=18),
        pytest.e1_e2,
    ]
    for source in modules:
        for target in modules:
            assert verify_twist_hom(source, target)


def test_hom_of_simple_pole_modules_has_simple_pole():
    first = jordan_module(Fraction(1, 2), 2)
    second = e_lambda(-1, trunc=18)
    assert is_simple_pole(hom_ab(first, second))
    assert not is_simple_pole(hom_ab(pytest.e2, second))
