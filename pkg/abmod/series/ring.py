# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import math
from fractions import Fraction

from ..errors import NotAUnit

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value):
    """Convert an int, Fraction, str or sympy Rational to a Fraction

    :param value: rational number
    :return: the number as a Fraction
    :rtype: Fraction
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy Rational / Integer
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, float):
        raise TypeError("floats are not exact, use Fraction or str")
    return Fraction(value)


class Series:
    """Truncated formal power series in b with rational coefficients.

    A series is known modulo b^trunc: ``coeffs[i]`` is the coefficient of b^i
    and exactly ``trunc`` coefficients are stored. Binary operations produce
    the minimum truncation of their operands. Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=(), trunc=None):
        """Initialize an instance.

        :param coeffs: coefficients c_0, c_1, ... (anything accepted by to_fraction)
        :param int trunc: truncation order N >= 0. Default is len(coeffs).
            Missing coefficients are zero, superfluous ones are dropped.
        """
        values = [to_fraction(c) for c in coeffs]
        if trunc is None:
            trunc = len(values)
        if trunc < 0:
            raise ValueError(f"truncation order should be non-negative, got {trunc}")
        if len(values) < trunc:
            values.extend([ZERO] * (trunc - len(values)))
        self._coeffs = tuple(values[:trunc])

    @classmethod
    def _raw(cls, values):
        # values is a tuple of Fractions of the right length
        obj = cls.__new__(cls)
        obj._coeffs = values
        return obj

    @classmethod
    def zero(cls, trunc):
        return cls._raw((ZERO,) * trunc)

    @classmethod
    def one(cls, trunc):
        return cls.monomial(0, trunc)

    @classmethod
    def monomial(cls, degree, trunc, coefficient=ONE):
        """c * b^degree truncated at trunc"""
        values = [ZERO] * trunc
        if degree < trunc:
            values[degree] = to_fraction(coefficient)
        return cls._raw(tuple(values))

    @classmethod
    def constant(cls, value, trunc):
        return cls.monomial(0, trunc, value)

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def trunc(self):
        return len(self._coeffs)

    def __getitem__(self, index):
        return self._coeffs[index]

    def __iter__(self):
        return iter(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        return Series.constant(other, self.trunc)

    def __add__(self, other):
        other = self._coerce(other)
        return Series._raw(tuple(x + y for x, y in zip(self._coeffs, other._coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Series._raw(tuple(-x for x in self._coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        return Series._raw(tuple(x - y for x, y in zip(self._coeffs, other._coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Series):
            factor = to_fraction(other)
            return Series._raw(tuple(x * factor for x in self._coeffs))
        a, b = self._coeffs, other._coeffs
        n = min(len(a), len(b))
        out = [ZERO] * n
        for i in range(n):
            ai = a[i]
            if not ai:
                continue
            for j in range(n - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series._raw(tuple(out))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        from .text import format_series

        return f"Series({format_series(self)!r}, trunc={self.trunc})"

    def __str__(self):
        from .text import format_series

        return format_series(self)

    def is_zero(self):
        """True when every known coefficient vanishes"""
        return not any(self._coeffs)

    def valuation(self):
        """Index of the first nonzero coefficient.

        :return: the valuation, or math.inf when the series is zero at working precision
        """
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return math.inf

    def is_unit(self):
        return self.trunc > 0 and self._coeffs[0] != 0

    def invert_unit(self):
        """Multiplicative inverse of a unit, at the same truncation.

        :raises NotAUnit: when the constant term vanishes
        """
        a = self._coeffs
        if not a or not a[0]:
            raise NotAUnit("series with vanishing constant term has no inverse")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, len(a)):
            acc = ZERO
            for i in range(1, n + 1):
                if a[i]:
                    acc += a[i] * out[n - i]
            out.append(-acc * inv0)
        return Series._raw(tuple(out))

    def derivative(self):
        """Derivative with respect to b. The truncation drops by one."""
        a = self._coeffs
        if not a:
            return self
        return Series._raw(tuple(i * a[i] for i in range(1, len(a))))

    def shift(self, k):
        """Multiply by b^k, k >= 0. The result is known modulo b^(trunc + k)."""
        if k < 0:
            raise ValueError("use divide_b_power for negative shifts")
        return Series._raw((ZERO,) * k + self._coeffs)

    def divide_b_power(self, k):
        """Divide by b^k. The first k coefficients must vanish.

        :raises ValueError: when the series has valuation < k
        """
        if k < 0:
            return self.shift(-k)
        if any(self._coeffs[:k]):
            raise ValueError(f"series of valuation {self.valuation()} is not divisible by b^{k}")
        return Series._raw(self._coeffs[k:])

    def split(self, k):
        """Split s = low + b^k * high with deg(low) < k.

        :return: (low, high) where low keeps the truncation and high is known modulo b^(trunc - k)
        """
        k = min(k, self.trunc)
        low = Series._raw(self._coeffs[:k] + (ZERO,) * (self.trunc - k))
        high = Series._raw(self._coeffs[k:])
        return low, high

    def with_trunc(self, trunc):
        """Truncate, or pad with zero coefficients, to the given order"""
        n = self.trunc
        if trunc == n:
            return self
        if trunc < n:
            return Series._raw(self._coeffs[:trunc])
        return Series._raw(self._coeffs + (ZERO,) * (trunc - n))

    def subs_neg(self):
        """The series s(-b)"""
        return Series._raw(tuple(-c if i % 2 else c for i, c in enumerate(self._coeffs)))

    def constant_term(self):
        return self._coeffs[0] if self._coeffs else ZERO

    def degree(self):
        """Index of the last nonzero coefficient, -1 for the zero series"""
        for i in range(len(self._coeffs) - 1, -1, -1):
            if self._coeffs[i]:
                return i
        return -1
