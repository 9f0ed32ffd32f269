import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from abmod.errors import NotAUnit
from abmod.series import Series, to_fraction


def test_to_fraction():
    assert to_fraction(3) == Fraction(3)
    assert to_fraction("2/6") == Fraction(1, 3)
    assert to_fraction(sympy.Rational(-3, 4)) == Fraction(-3, 4)
    with pytest.raises(TypeError):
        to_fraction(0.5)


def test_construction_pads_and_truncates():
    s = Series([1, 2], 4)
    assert s.coeffs == (1, 2, 0, 0)
    assert s.trunc == 4
    assert Series([1, 2, 3, 4], 2).coeffs == (1, 2)
    assert Series([5]).trunc == 1
    with pytest.raises(ValueError):
        Series([], -1)


def test_arithmetic_takes_smallest_truncation():
    s = Series([1, 1], 5)
    t = Series([0, 1, 1], 3)
    assert (s + t).trunc == 3
    assert (s * t).coeffs == (0, 1, 2)
    assert (s - s).is_zero()
    assert (2 * s).coeffs == (2, 2, 0, 0, 0)
    assert (s + 1).coeffs == (2, 1, 0, 0, 0)
    assert (1 - s).coeffs == (0, -1, 0, 0, 0)


def test_valuation():
    assert Series([0, 0, 3], 5).valuation() == 2
    assert Series.zero(5).valuation() == math.inf
    assert Series.monomial(7, 5).is_zero()


def test_invert_unit():
    s = Series([1, -1], 6)
    inverse = s.invert_unit()
    assert inverse.coeffs == (1, 1, 1, 1, 1, 1)
    assert s * inverse == Series.one(6)

    t = Series([2, 3, Fraction(1, 2)], 8)
    assert t * t.invert_unit() == Series.one(8)

    with pytest.raises(NotAUnit):
        Series([0, 1], 4).invert_unit()
    # also an ArithmeticError
    with pytest.raises(ArithmeticError):
        Series.zero(3).invert_unit()


def test_derivative_drops_precision():
    s = Series([1, 2, 3, 4], 4)
    assert s.derivative() == Series([2, 6, 12], 3)


def test_shift_and_divide():
    s = Series([1, 2], 3)
    shifted = s.shift(2)
    assert shifted.trunc == 5
    assert shifted.coeffs == (0, 0, 1, 2, 0)
    assert shifted.divide_b_power(2) == s
    with pytest.raises(ValueError):
        s.divide_b_power(1)
    with pytest.raises(ValueError):
        s.shift(-1)


def test_split():
    s = Series([1, 2, 3, 4], 4)
    low, high = s.split(2)
    assert low == Series([1, 2], 4)
    assert high == Series([3, 4], 2)
    assert low + high.shift(2) == s


def test_subs_neg_and_with_trunc():
    s = Series([1, 2, 3], 3)
    assert s.subs_neg().coeffs == (1, -2, 3)
    assert s.with_trunc(5).coeffs == (1, 2, 3, 0, 0)
    assert s.with_trunc(1).coeffs == (1,)
    assert s.degree() == 2
    assert Series.zero(3).degree() == -1
    assert s.constant_term() == 1


def test_equality_and_hash():
    assert Series([1, 2], 3) == Series([1, 2, 0])
    assert Series([1, 2], 3) != Series([1, 2], 4)
    assert len({Series([1], 2), Series([1, 0])}) == 1


def random_series(rng, trunc, valuation=0):
    coeffs = [
        Fraction(int(rng.randint(-5, 6)), int(rng.randint(1, 4))) for _ in range(trunc)
    ]
    coeffs[:valuation] = [0] * valuation
    return Series(coeffs, trunc)


@pytest.mark.parametrize("seed", range(10))
def test_ring_axioms_on_random_series(seed):
    rng = np.random.RandomState(seed)
    s, t, u = (random_series(rng, 7) for _ in range(3))
    assert (s * t) * u == s * (t * u)
    assert s * t == t * s
    assert s * (t + u) == s * t + s * u
    assert (s + t) * u == s * u + t * u
    assert s + t == t + s
    assert s - s == Series.zero(7)
    assert s * Series.one(7) == s


@pytest.mark.parametrize("seed", range(10))
def test_invert_unit_on_random_series(seed):
    rng = np.random.RandomState(seed)
    s = random_series(rng, 8)
    if s.constant_term() == 0:
        s = s + 1
    assert s.is_unit()
    assert s * s.invert_unit() == Series.one(8)
    assert s.invert_unit() * s == Series.one(8)


@pytest.mark.parametrize("seed", range(10))
def test_leibniz_rule_on_random_series(seed):
    rng = np.random.RandomState(seed)
    s, t = random_series(rng, 9), random_series(rng, 9)
    product = (s * t).derivative()
    assert product.trunc == 8
    assert product == s.derivative() * t.with_trunc(8) + s.with_trunc(8) * t.derivative()


@pytest.mark.parametrize("seed", range(10))
def test_valuation_is_additive_on_random_series(seed):
    rng = np.random.RandomState(seed)
    first, second = int(rng.randint(0, 4)), int(rng.randint(0, 4))
    s = random_series(rng, 10, valuation=first)
    t = random_series(rng, 10, valuation=second)
    # force the announced valuations
    s = s + Series.monomial(first, 10) * (1 - s[first])
    t = t + Series.monomial(second, 10) * (1 - t[second])
    assert s.valuation() == first
    assert t.valuation() == second
    assert (s * t).valuation() == first + second
    assert Series.zero(10).valuation() == math.inf
    assert (s * Series.zero(10)).valuation() == math.inf
