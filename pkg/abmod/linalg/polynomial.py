# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging
from fractions import Fraction

import sympy

from ..series import format_rational, to_fraction
from .matrix import to_rational

Z = sympy.Symbol("z")

logger = logging.getLogger()


class RationalPolynomial:
    """Univariate polynomial in z with rational coefficients.

    Coefficients are stored in ascending order without trailing zeros,
    so the zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        values = [to_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs = tuple(values)

    @classmethod
    def from_sympy(cls, poly):
        """From a sympy Poly or expression in z"""
        if not isinstance(poly, sympy.Poly):
            poly = sympy.Poly(poly, Z, domain=sympy.QQ)
        return cls(reversed([to_fraction(c) for c in poly.all_coeffs()]))

    @classmethod
    def from_roots(cls, roots):
        """Monic polynomial prod (z - r)"""
        poly = cls([1])
        for r in roots:
            poly = poly * cls([-to_fraction(r), 1])
        return poly

    def to_sympy(self):
        return sympy.Poly(
            [to_rational(c) for c in reversed(self._coeffs)] or [0], Z, domain=sympy.QQ
        )

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def degree(self):
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self):
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coefficient(self, power):
        return self._coeffs[power] if 0 <= power < len(self._coeffs) else Fraction(0)

    def is_monic(self):
        return self.leading_coefficient == 1

    def monic(self):
        lead = self.leading_coefficient
        if lead == 0:
            raise ZeroDivisionError("the zero polynomial cannot be made monic")
        return RationalPolynomial(c / lead for c in self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __mul__(self, other):
        if not isinstance(other, RationalPolynomial):
            factor = to_rational(other)
            return RationalPolynomial.from_sympy(self.to_sympy().mul_ground(factor))
        return RationalPolynomial.from_sympy(self.to_sympy().mul(other.to_sympy()))

    __rmul__ = __mul__

    def __add__(self, other):
        return RationalPolynomial.from_sympy(self.to_sympy().add(other.to_sympy()))

    def __neg__(self):
        return RationalPolynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __pow__(self, exponent):
        return RationalPolynomial.from_sympy(self.to_sympy().pow(exponent))

    def __call__(self, value):
        """Value at a rational number"""
        return to_fraction(self.to_sympy().eval(to_rational(value)))

    def compose_affine(self, slope, offset):
        """The polynomial p(slope * z + offset)"""
        inner = sympy.Poly([to_rational(slope), to_rational(offset)], Z, domain=sympy.QQ)
        return RationalPolynomial.from_sympy(self.to_sympy().compose(inner))

    def factor(self):
        """Factorization over Q into monic irreducible factors.

        :return: list of (factor, multiplicity), sorted by degree then coefficients
        """
        if self.degree < 1:
            return []
        _, factors = self.to_sympy().factor_list()
        result = [
            (RationalPolynomial.from_sympy(q).monic(), int(m)) for q, m in factors
        ]
        return sorted(result, key=lambda item: (item[0].degree, item[0].coeffs))

    def rational_roots(self):
        """Rational roots with multiplicity, ascending"""
        roots = [
            (-q.coefficient(0), m) for q, m in self.factor() if q.degree == 1
        ]
        return sorted(roots)

    def __repr__(self):
        return f"RationalPolynomial({self})"

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for power in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            monomial = "" if power == 0 else ("z" if power == 1 else f"z^{power}")
            if power == 0:
                term = format_rational(magnitude)
            elif magnitude == 1:
                term = monomial
            else:
                term = f"{format_rational(magnitude)}*{monomial}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)


def evaluate_at_matrix(poly, matrix):
    """Horner evaluation of a polynomial at a square sympy matrix"""
    matrix = sympy.Matrix(matrix)
    size = matrix.rows
    acc = sympy.zeros(size, size)
    for c in reversed(poly.coeffs):
        acc = acc * matrix + to_rational(c) * sympy.eye(size)
    return acc


def characteristic_polynomial(matrix):
    """det(z - T) by the division free Berkowitz algorithm"""
    matrix = sympy.Matrix(matrix)
    if matrix.rows == 0:
        return RationalPolynomial([1])
    return RationalPolynomial.from_sympy(matrix.charpoly(Z).as_expr())


def minimal_polynomial(matrix):
    """Minimal polynomial of a rational square matrix.

    For every irreducible factor q of the characteristic polynomial the
    exponent is the smallest e such that the kernel of q(T)^e reaches its
    generalized dimension. The result is checked by evaluation.

    :param matrix: square sympy matrix with rational entries
    :return: monic minimal polynomial, 1 for the empty matrix
    :rtype: RationalPolynomial
    """
    matrix = sympy.Matrix(matrix)
    size = matrix.rows
    if size == 0:
        return RationalPolynomial([1])

    result = RationalPolynomial([1])
    for factor, multiplicity in characteristic_polynomial(matrix).factor():
        generalized_dim = factor.degree * multiplicity
        q_of_t = evaluate_at_matrix(factor, matrix)
        power, exponent = q_of_t, 1
        while size - power.rank() < generalized_dim:
            power = power * q_of_t
            exponent += 1
        result = result * factor ** exponent

    result = result.monic()
    if not evaluate_at_matrix(result, matrix).is_zero_matrix:
        raise ArithmeticError("minimal polynomial does not annihilate the matrix")
    logger.debug(f"minimal polynomial of a {size}x{size} matrix: {result}")
    return result
