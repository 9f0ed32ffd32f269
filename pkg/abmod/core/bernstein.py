# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from ..config import config
from ..linalg.polynomial import RationalPolynomial, minimal_polynomial
from .fixed_points import biggest_simple_pole_sub, saturate
from .module import residue_endomorphism
from .precision import with_precision_retry

logger = logging.getLogger()


@dataclass(frozen=True)
class BernsteinPoly:
    """Monic rational polynomial with its factorization over Q"""

    poly: RationalPolynomial
    factorization: Tuple[Tuple[RationalPolynomial, int], ...] = ()
    rational_roots: Tuple[Tuple[Fraction, int], ...] = ()

    @classmethod
    def from_polynomial(cls, poly):
        poly = poly.monic()
        return cls(
            poly=poly,
            factorization=tuple(poly.factor()),
            rational_roots=tuple(poly.rational_roots()),
        )

    @property
    def degree(self):
        return self.poly.degree

    def multiplicity(self, root):
        return dict(self.rational_roots).get(Fraction(root), 0)

    def symbolic_factors(self):
        """Irreducible factors of degree > 1"""
        return [(q, m) for q, m in self.factorization if q.degree > 1]

    def roots_within(self, n):
        """Rational roots lying in the open interval ]-n, 0["""
        return [(r, m) for r, m in self.rational_roots if -n < r < 0]

    def __str__(self):
        return str(self.poly)


def bernstein_of_simple_pole(module):
    """Minimal polynomial of -T where T is the residue of a simple pole module"""
    return BernsteinPoly.from_polynomial(minimal_polynomial(-residue_endomorphism(module)))


def bernstein(module, trunc=None, max_iter=None, cancel=None):
    """Bernstein polynomial of a regular module.

    :param AbModule module: the module E
    :return: minimal polynomial of -b^-1 a on the saturation modulo b
    :rtype: BernsteinPoly
    """
    result = with_precision_retry(saturate, module, trunc=trunc, max_iter=max_iter, cancel=cancel)
    poly = bernstein_of_simple_pole(result.module)
    logger.info(f"Bernstein polynomial of {module!r}: {poly}")
    return poly


def dual_bernstein(module, trunc=None, max_iter=None, cancel=None):
    """Dual Bernstein polynomial: same construction on the biggest simple pole submodule"""
    result = with_precision_retry(
        biggest_simple_pole_sub, module, trunc=trunc, max_iter=max_iter, cancel=cancel
    )
    poly = bernstein_of_simple_pole(result.module)
    logger.info(f"dual Bernstein polynomial of {module!r}: {poly}")
    return poly


@dataclass(frozen=True)
class SpectralClass:
    """Roots, or irreducible factors, that differ by integers.

    A rational class lists its roots ascending and is identified by the
    fractional part of its smallest root. A symbolic class lists factors
    q(z - m) of the same irreducible q with their integer offsets m.
    """

    roots: Tuple[Tuple[Fraction, int], ...] = ()
    factors: Tuple[Tuple[RationalPolynomial, int, int], ...] = ()

    @property
    def symbolic(self):
        return bool(self.factors)

    @property
    def representative(self):
        if self.symbolic:
            return None
        return self.roots[0][0] - (self.roots[0][0] // 1)

    @property
    def smallest(self):
        return self.roots[0] if self.roots else None


def _height(poly):
    return max(max(abs(c.numerator), c.denominator) for c in poly.coeffs)


def integer_offset(first, second, bound=None):
    """Integer m with second(z) = first(z - m), or None.

    Both factors are monic. Comparing the coefficients of z^(d-1) gives
    m = (c1 - c2) / d, which is checked against the bound and by composition.
    """
    if first.degree != second.degree or first.degree < 1:
        return None
    d = first.degree
    offset = (first.coefficient(d - 1) - second.coefficient(d - 1)) / d
    if offset.denominator != 1:
        return None
    if bound is None:
        bound = d * max(_height(first), _height(second))
    if abs(offset) > bound:
        return None
    if first.compose_affine(1, -offset) != second:
        return None
    return int(offset)


def spectral_classes(poly, shift_bound=None):
    """Group the roots of a Bernstein polynomial modulo the integers.

    :param BernsteinPoly poly: factored polynomial
    :param int shift_bound: largest integer offset tried between irrational
        factors, default degree times coefficient height
    :return: rational classes sorted by representative, then symbolic classes
    :rtype: list
    """
    shift_bound = shift_bound if shift_bound is not None else config["shift_bound"]
    rational = {}
    for root, mult in poly.rational_roots:
        rational.setdefault(root - (root // 1), []).append((root, mult))
    classes = [
        SpectralClass(roots=tuple(sorted(roots))) for _, roots in sorted(rational.items())
    ]

    groups = []
    for factor, mult in poly.symbolic_factors():
        for group in groups:
            offset = integer_offset(group[0][0], factor, shift_bound)
            if offset is not None:
                group.append((factor, mult, offset))
                break
        else:
            groups.append([(factor, mult, 0)])
    for group in groups:
        classes.append(SpectralClass(factors=tuple(sorted(group, key=lambda x: x[2]))))
    return classes


@dataclass(frozen=True)
class PolePrediction:
    """Predicted pole of the meromorphic extension, one per spectral class.

    For the class with smallest root alpha and multiplicity d the pole sits
    at -n - alpha with order at least d. roots_above counts the roots of
    b_E (with multiplicity) not smaller than the pole, forced_root tells whether
    the pole lies in [-1, 0[ where it must itself be a root of multiplicity
    at least d.
    """

    representative: Optional[Fraction]
    alpha: Optional[Fraction]
    multiplicity: int
    pole: Optional[Fraction]
    order_lower_bound: int
    roots_above: int = 0
    forced_root: bool = False
    consistent: bool = True
    symbolic_factors: Tuple[str, ...] = field(default=())

    @property
    def symbolic(self):
        return bool(self.symbolic_factors)


def predict_poles(poly, n, shift_bound=None):
    """Pole predictions for the roots of a Bernstein polynomial.

    :param BernsteinPoly poly: Bernstein polynomial of the module
    :param int n: number of variables
    :return: one PolePrediction per spectral class
    :rtype: list
    """
    predictions = []
    for cls in spectral_classes(poly, shift_bound):
        if cls.symbolic:
            predictions.append(
                PolePrediction(
                    representative=None,
                    alpha=None,
                    multiplicity=cls.factors[0][1],
                    pole=None,
                    order_lower_bound=cls.factors[0][1],
                    symbolic_factors=tuple(str(q) for q, _, _ in cls.factors),
                )
            )
            continue
        alpha, mult = cls.smallest
        pole = -n - alpha
        roots_above = sum(m for r, m in poly.rational_roots if r >= pole)
        forced = -1 <= pole < 0
        consistent = roots_above >= mult and (not forced or poly.multiplicity(pole) >= mult)
        predictions.append(
            PolePrediction(
                representative=cls.representative,
                alpha=alpha,
                multiplicity=mult,
                pole=pole,
                order_lower_bound=mult,
                roots_above=roots_above,
                forced_root=forced,
                consistent=consistent,
            )
        )
    return predictions


def pole_prediction(module, n, trunc=None, max_iter=None, shift_bound=None):
    """Pole predictions from the Bernstein polynomial of a module"""
    return predict_poles(bernstein(module, trunc=trunc, max_iter=max_iter), n, shift_bound)
