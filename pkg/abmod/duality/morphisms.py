# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List

import sympy

from ..linalg.matrix import SeriesMatrix
from ..series import Series, to_fraction
from .hom import hom_ab, vector_to_map

logger = logging.getLogger()


@dataclass(frozen=True)
class KernelBasis:
    """Solutions of a(v) = 0 certified on their first jet_order coefficients"""

    vectors: List[tuple]
    jet_order: int
    precision_caveat: bool


def a_kernel(module):
    """Basis of the kernel of a on a module, order by order.

    Solving K v + b^2 v' = 0 coefficient by coefficient gives at order n
    K_0 v_n + sum_(t>=1) K_t v_(n-t) + (n-1) v_(n-1) = 0. The general
    solution is kept as blocks B_m (v_m = B_m p) in free parameters p that
    are refined at every order by a rational nullspace. Solutions are then
    identified by their coefficients of order < trunc // 2 and a caveat is
    raised when that identification still changed at the last order.
    """
    size, trunc = module.rank, module.trunc
    if size == 0 or trunc == 0:
        return KernelBasis([], 0, False)
    coefficients = [module.a_matrix.coefficient(t) for t in range(trunc)]
    jet_order = max(1, trunc // 2)

    blocks = []
    params = 0
    previous_rank = None
    for order in range(trunc):
        if order == trunc - 1 and len(blocks) >= jet_order:
            previous_rank = _jet_rank(blocks, jet_order)
        known = sympy.zeros(size, params)
        for t in range(1, order + 1):
            known += coefficients[t] * blocks[order - t]
        if order >= 1:
            known += (order - 1) * blocks[order - 1]
        system = coefficients[0].row_join(known)
        null = system.nullspace()
        if null:
            solution = sympy.Matrix.hstack(*null)
        else:
            solution = sympy.zeros(size + params, 0)
        blocks = [block * solution[size:, :] for block in blocks] + [solution[:size, :]]
        params = solution.cols
        if params == 0:
            return KernelBasis([], jet_order, False)

    jets = sympy.Matrix.vstack(*blocks[:jet_order])
    _, pivots = jets.rref()
    vectors = []
    for p in pivots:
        vectors.append(
            tuple(
                Series([blocks[m][i, p] for m in range(trunc)], trunc) for i in range(size)
            )
        )
    caveat = previous_rank is not None and len(pivots) < previous_rank
    return KernelBasis(vectors, jet_order, caveat)


def _jet_rank(blocks, jet_order):
    return sympy.Matrix.vstack(*blocks[:jet_order]).rank()


@dataclass(frozen=True)
class MorphismSpace:
    """Basis of the (a,b)-linear maps E -> F found at working precision"""

    source_rank: int
    target_rank: int
    basis: List[SeriesMatrix]
    precision_caveat: bool
    trunc: int

    @property
    def certified_dim(self):
        return len(self.basis)


def morphism_space(source, target, trunc=None):
    """(a,b)-linear maps source -> target as the a-kernel of Hom(source, target)

    :param AbModule source: the module E
    :param AbModule target: the module F
    :param int trunc: working precision, default the smaller module truncation
    :rtype: MorphismSpace
    """
    hom = hom_ab(source, target)
    if trunc is not None:
        hom = hom.with_trunc(trunc)
    kernel = a_kernel(hom)
    basis = [vector_to_map(v, source.rank, target.rank) for v in kernel.vectors]
    if kernel.precision_caveat:
        logger.warning(
            f"morphism space {source!r} -> {target!r} still changing at precision {hom.trunc}"
        )
    return MorphismSpace(source.rank, target.rank, basis, kernel.precision_caveat, hom.trunc)


@dataclass(frozen=True)
class IsomorphismCertificate:
    """Outcome of verify_isomorphism; truthy when phi is an isomorphism"""

    residual_zero: bool
    residual_valuation: float
    unit_determinant: bool
    determinant: Fraction
    precision: int

    def __bool__(self):
        return self.residual_zero and self.unit_determinant


def morphism_residual(phi, source, target):
    """A_F phi + b^2 phi' - phi A_E, zero exactly for (a,b)-linear maps"""
    trunc = min(phi.trunc, source.trunc, target.trunc)
    phi = phi.with_trunc(trunc)
    derivative = phi.derivative().shift(2).with_trunc(trunc)
    return target.a_matrix.with_trunc(trunc) @ phi + derivative - phi @ source.a_matrix.with_trunc(trunc)


def verify_isomorphism(phi, source, target):
    """Certify that phi: source -> target is an isomorphism of (a,b)-modules.

    :return: certificate, truthy for an isomorphism
    :rtype: IsomorphismCertificate
    """
    residual = morphism_residual(phi, source, target)
    valuation = residual.valuation()
    if phi.is_square() and phi.nrows > 0:
        determinant = to_fraction(phi.constant_term().det())
    elif phi.is_square():
        determinant = Fraction(1)
    else:
        determinant = Fraction(0)
    return IsomorphismCertificate(
        residual_zero=valuation == math.inf,
        residual_valuation=valuation,
        unit_determinant=determinant != 0,
        determinant=determinant,
        precision=residual.trunc,
    )
