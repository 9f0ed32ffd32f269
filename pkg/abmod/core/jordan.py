# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging
from fractions import Fraction

import sympy

from ..errors import NoSuchBlock, NotMinimalInClass, NotSimplePole
from ..linalg.matrix import to_rational, vector_is_zero, vector_sub
from ..linalg.polynomial import characteristic_polynomial
from ..series import Series, to_fraction
from .module import apply_a, is_simple_pole, residue_endomorphism

logger = logging.getLogger()


def _check_minimal(residue, beta):
    for root, _ in characteristic_polynomial(residue).rational_roots():
        offset = beta - root
        if offset.denominator == 1 and offset >= 1:
            raise NotMinimalInClass(
                f"{root} = {beta} - {offset} is an eigenvalue of the residue",
                eigenvalue=root,
            )


def _order_zero_chain(residue, beta, d):
    size = residue.rows
    nilpotent = residue - to_rational(beta) * sympy.eye(size)
    top = nilpotent ** d
    below = nilpotent ** (d - 1)
    if top.rank() == below.rank():
        raise NoSuchBlock(f"residue has no Jordan block of size {d} at {beta}")
    for candidate in top.nullspace():
        if not (below * candidate).is_zero_matrix:
            break
    else:
        raise NoSuchBlock(f"residue has no Jordan block of size {d} at {beta}")
    # v^(j) = N^(d-j) v^(d)
    return [nilpotent ** (d - j) * candidate for j in range(1, d + 1)]


def jordan_chain_lift(module, beta, d, trunc=None):
    """Lift a Jordan chain of the residue to a chain in the module.

    Finds e_1, ..., e_d with a.e_j = beta.b.e_j + b.e_(j-1) (e_0 = 0) at the
    working precision. Writing a = b.C(b) and e_j = sum_m v_m b^m the order
    m coefficient solves (C_0 + m - beta) v_m = v_m(j-1) - sum_t C_t v_(m-t),
    which is invertible for m >= 1 because beta is minimal in its class.

    :param AbModule module: a simple pole module F
    :param beta: rational spectral value
    :param int d: chain length
    :param int trunc: working precision, default the module truncation
    :return: list of d vectors (tuples of series)
    :raises NotSimplePole: when a.F is not contained in b.F
    :raises NotMinimalInClass: when beta - m is an eigenvalue for some m >= 1
    :raises NoSuchBlock: when the residue has no block of size >= d at beta
    """
    if not is_simple_pole(module):
        raise NotSimplePole(f"{module!r} does not have a simple pole")
    if d < 1:
        raise ValueError("chain length should be at least 1")
    beta = to_fraction(beta)
    trunc = trunc or module.trunc
    module = module.with_trunc(trunc)
    size = module.rank

    residue = residue_endomorphism(module)
    _check_minimal(residue, beta)
    orders = [[v] for v in _order_zero_chain(residue, beta, d)]

    coefficients = [module.a_matrix.coefficient(t + 1) for t in range(trunc)]
    solvers = {}
    for m in range(1, trunc):
        solvers[m] = (residue + to_rational(m - beta) * sympy.eye(size)).inv()

    for j in range(d):
        for m in range(1, trunc):
            rhs = orders[j - 1][m] if j > 0 else sympy.zeros(size, 1)
            for t in range(1, m + 1):
                rhs = rhs - coefficients[t] * orders[j][m - t]
            orders[j].append(solvers[m] * rhs)

    chain = []
    for vectors in orders:
        chain.append(
            tuple(Series([vectors[m][i] for m in range(trunc)], trunc) for i in range(size))
        )
    logger.debug(f"lifted Jordan chain of length {d} at {beta} to precision {trunc}")
    return chain


def chain_residuals(module, beta, chain):
    """a.e_j - beta.b.e_j - b.e_(j-1) for every vector of a chain"""
    beta = Fraction(beta)
    residuals = []
    previous = None
    for vector in chain:
        rhs = tuple(x.shift(1) * beta for x in vector)
        if previous is not None:
            rhs = tuple(x + y.shift(1) for x, y in zip(rhs, previous))
        residuals.append(vector_sub(apply_a(module, vector), rhs))
        previous = vector
    return residuals


def chain_is_exact(module, beta, chain):
    """True when every residual vanishes at working precision"""
    return all(vector_is_zero(r) for r in chain_residuals(module, beta, chain))
