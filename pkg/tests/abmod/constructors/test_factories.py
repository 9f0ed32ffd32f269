from fractions import Fraction

import pytest
import sympy

from abmod.config import default_trunc
from abmod.constructors import PhamSpec, e_lambda, jordan_module, pham, random_regular
from abmod.core import is_regular, is_simple_pole, residue_endomorphism


def test_e_lambda():
    module = e_lambda(Fraction(-3, 4))
    assert module.rank == 1
    assert module.trunc == default_trunc(1)
    assert module.name == "E_-3/4"
    assert residue_endomorphism(module) == sympy.Matrix([[sympy.Rational(-3, 4)]])
    assert e_lambda(1).a_matrix == pytest.e1.a_matrix


def test_jordan_module():
    module = jordan_module(Fraction(1, 2), 2)
    assert module.name == "J(1/2,2)"
    assert module.a_matrix == pytest.jordan_half_2.a_matrix
    assert str(jordan_module(1, 3).a_matrix[1, 2]) == "b"
    assert jordan_module(1, 3).a_matrix[0, 2].is_zero()


def test_pham_spec():
    spec = PhamSpec((3, 3))
    assert spec.n == 2
    assert spec.milnor_number == 4
    assert spec.spectrum() == [Fraction(2, 3), Fraction(1), Fraction(1), Fraction(4, 3)]
    assert PhamSpec((2,)).spectrum() == [Fraction(1, 2)]
    with pytest.raises(ValueError):
        PhamSpec((1, 3))
    with pytest.raises(ValueError):
        PhamSpec(())


def test_pham():
    module = pham((3, 3))
    assert module.name == "pham(3,3)"
    assert module.trunc == default_trunc(4)
    assert module.a_matrix == pytest.pham_3_3.a_matrix
    assert is_simple_pole(module)
    assert pham(PhamSpec((2, 3)), trunc=8).rank == 2


def test_random_regular_is_deterministic():
    first = random_regular(2, 5)
    second = random_regular(2, 5)
    assert first.a_matrix == second.a_matrix
    assert first.name == "random(2,5)"
    assert first.trunc == default_trunc(2)
    assert random_regular(2, 6).a_matrix != first.a_matrix


@pytest.mark.parametrize("seed", [0, 1, 2])
def test_random_regular_is_regular(seed):
    module = random_regular(2, seed)
    assert module.rank == 2
    assert is_regular(module)


def test_random_profiles():
    module = random_regular(3, 4, profile="simple_pole")
    assert is_simple_pole(module)

    diagonal = random_regular(2, 4, profile="diagonal", trunc=12)
    assert diagonal.trunc == 12
    assert is_regular(diagonal)

    with pytest.raises(ValueError):
        random_regular(2, 0, profile="unknown")
