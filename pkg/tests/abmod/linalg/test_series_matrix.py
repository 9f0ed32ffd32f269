import math
from fractions import Fraction

import pytest
import sympy

from abmod.linalg import SeriesMatrix, standard_vector, zero_vector
from abmod.series import Series, parse_series


def matrix(rows, trunc=6):
    return SeriesMatrix([[parse_series(x, trunc) for x in row] for row in rows], trunc=trunc)


def test_shape_and_truncation():
    m = matrix([["1", "b"], ["0", "b^2"], ["1/2", "0"]])
    assert m.shape == (3, 2)
    assert m.trunc == 6
    assert m.column(1) == (parse_series("b", 6), parse_series("b^2", 6), Series.zero(6))
    assert m.row(2) == (Series.constant(Fraction(1, 2), 6), Series.zero(6))
    assert len(m.columns()) == 2

    with pytest.raises(ValueError):
        SeriesMatrix([[Series.one(3)]], shape=(2, 1))
    with pytest.raises(TypeError):
        SeriesMatrix([[1]])
    with pytest.raises(ValueError):
        SeriesMatrix([])


def test_empty_matrices():
    empty = SeriesMatrix.zeros(0, 3, 5)
    assert empty.shape == (0, 3)
    assert empty.trunc == 5
    assert empty.coefficient(0).shape == (0, 3)
    assert empty.valuation() == math.inf


def test_arithmetic():
    m = matrix([["1", "b"], ["0", "1"]])
    n = matrix([["b", "0"], ["1", "b^2"]])
    assert m + n == matrix([["1 + b", "b"], ["1", "1 + b^2"]])
    assert m - m == SeriesMatrix.zeros(2, 2, 6)
    assert m @ n == matrix([["2*b", "b^3"], ["1", "b^2"]])
    assert m @ SeriesMatrix.identity(2, 6) == m
    assert m.scale(Fraction(2)) == matrix([["2", "2*b"], ["0", "2"]])
    assert (-m) + m == SeriesMatrix.zeros(2, 2, 6)
    with pytest.raises(ValueError):
        m @ SeriesMatrix.zeros(3, 1, 6)


def test_apply():
    m = matrix([["1", "b"], ["0", "1"]])
    vector = (parse_series("b", 6), parse_series("1", 6))
    assert m.apply(vector) == (parse_series("2*b", 6), parse_series("1", 6))
    assert m.apply(zero_vector(2, 6)) == zero_vector(2, 6)
    assert m.apply(standard_vector(2, 1, 6)) == m.column(1)


def test_transpose_kron_and_stacks():
    m = matrix([["1", "b"], ["0", "2"]])
    assert m.T == matrix([["1", "0"], ["b", "2"]])

    identity = SeriesMatrix.identity(2, 6)
    kron = m.kron(identity)
    assert kron.shape == (4, 4)
    assert kron[0, 2] == parse_series("b", 6)
    assert kron[1, 3] == parse_series("b", 6)
    assert kron[0, 3].is_zero()

    stacked = m.hstack(identity)
    assert stacked.shape == (2, 4)
    assert stacked.column(2) == identity.column(0)

    block = m.block_diag(SeriesMatrix.identity(1, 6))
    assert block.shape == (3, 3)
    assert block[2, 2] == Series.one(6)
    assert block[0, 2].is_zero()


def test_series_operations():
    m = matrix([["1 + b", "b^2"], ["0", "b^3"]])
    assert m.subs_neg() == matrix([["1 - b", "b^2"], ["0", "-b^3"]])
    assert m.derivative() == matrix([["1", "2*b"], ["0", "3*b^2"]], trunc=5)
    assert m.shift(1).trunc == 7
    assert m.shift(1)[0, 0] == parse_series("b + b^2", 7)
    assert m.with_trunc(2) == matrix([["1 + b", "0"], ["0", "0"]], trunc=2)
    assert m.valuation() == 0
    assert m.map(lambda x: x.shift(1)).valuation() == 1


def test_coefficients():
    m = matrix([["1 + b", "b^2"], ["1/2*b", "0"]])
    assert m.constant_term() == sympy.Matrix([[1, 0], [0, 0]])
    assert m.coefficient(1) == sympy.Matrix([[1, 0], [sympy.Rational(1, 2), 0]])
    assert m.coefficient(10) == sympy.zeros(2, 2)

    rebuilt = SeriesMatrix.from_coefficients(
        [m.coefficient(t) for t in range(m.trunc)], m.trunc
    )
    assert rebuilt == m


def test_diagonal_and_from_columns():
    d = SeriesMatrix.diagonal([parse_series("b", 4), parse_series("2*b", 4)])
    assert d == matrix([["b", "0"], ["0", "2*b"]], trunc=4)
    columns = [(Series.one(4), Series.zero(4)), (Series.zero(4), Series.one(4))]
    assert SeriesMatrix.from_columns(columns, 2) == SeriesMatrix.identity(2, 4)
    assert SeriesMatrix.from_columns([], 2, trunc=4).shape == (2, 0)
