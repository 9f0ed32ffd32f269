# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import math
from dataclasses import dataclass, field
from typing import Tuple

import sympy

from ..errors import PrecisionExhausted
from ..series import Series, to_fraction
from .matrix import (
    SeriesMatrix,
    vector_is_zero,
    vector_shift,
    vector_sub,
    vector_valuation,
    vector_with_trunc,
)


@dataclass(frozen=True)
class Lattice:
    """Sub-lattice b^shift * span(generators) of a free module of rank k.

    The generators form a k x m SeriesMatrix, their truncation is the
    precision of the lattice relative to b^shift. A canonical lattice has
    column Hermite form: column j has its pivot b^v_j in row pivots[j][0],
    it vanishes above that row, entries of earlier columns in that row have
    degree < v_j, and the minimal valuation over all entries is zero.
    """

    generators: SeriesMatrix
    shift: int = 0
    canonical: bool = False
    pivots: Tuple[Tuple[int, int], ...] = field(default=())

    @property
    def ambient_rank(self):
        return self.generators.nrows

    @property
    def rank(self):
        """Number of generators (the rank for a canonical lattice)"""
        return self.generators.ncols

    @property
    def precision(self):
        return self.generators.trunc

    def pivot_sum(self):
        return sum(v for _, v in self.pivots)

    def columns(self):
        return self.generators.columns()


def standard_lattice(rank, trunc):
    """The lattice spanned by the standard basis"""
    return Lattice(
        SeriesMatrix.identity(rank, trunc),
        shift=0,
        canonical=True,
        pivots=tuple((i, 0) for i in range(rank)),
    )


def _high_part(entry, valuation, trunc):
    # (entry - low) / b^valuation, padded back to the working truncation
    _, high = entry.split(valuation)
    return high.with_trunc(trunc)


def _eliminate(column, pivot_column, factor, row, keep):
    # column - factor * pivot_column, with row set exactly to keep
    out = list(vector_sub(column, tuple(factor * x for x in pivot_column)))
    out[row] = keep
    return out


def canonical_form(lattice, full_rank=False, normalize=True):
    """Column Hermite form of a lattice.

    Rows are processed top to bottom. In each row the remaining column of
    minimal valuation becomes the pivot (ties go to the lowest index), it is
    made monic by its unit part and cleared from the other columns. Earlier
    columns are then reduced modulo b^v_j in each pivot row. Finally the
    common power of b is moved into the shift (skipped when normalize is
    False).

    :param Lattice lattice: input lattice
    :param bool full_rank: certify that the lattice has full rank
    :param bool normalize: move the minimal valuation into the shift
    :return: canonical lattice
    :rtype: Lattice
    :raises PrecisionExhausted: when full_rank is requested and a row has no
        pivot, or the pivot valuations use up the working precision
    """
    gens = lattice.generators
    size, trunc = gens.nrows, gens.trunc
    columns = [list(c) for c in gens.columns() if not vector_is_zero(c)]

    basis = []
    for row in range(size):
        best, best_val = None, math.inf
        for index, column in enumerate(columns):
            val = column[row].valuation()
            if val < best_val:
                best, best_val = index, val
        if best is None:
            if full_rank:
                raise PrecisionExhausted(
                    f"no pivot in row {row}: lattice is not of full rank at precision {trunc}",
                    precision=trunc,
                )
            continue
        pivot = columns.pop(best)
        unit = pivot[row].divide_b_power(best_val).with_trunc(trunc)
        inverse = unit.invert_unit()
        pivot = [x * inverse for x in pivot]
        pivot[row] = Series.monomial(best_val, trunc)

        remaining = []
        for column in columns:
            factor = _high_part(column[row], best_val, trunc)
            if not factor.is_zero():
                column = _eliminate(column, pivot, factor, row, Series.zero(trunc))
            if not vector_is_zero(column):
                remaining.append(column)
        columns = remaining
        basis.append([row, best_val, pivot])

    # reduce earlier columns modulo the pivots that follow them
    for j, (row, val, pivot) in enumerate(basis):
        for i in range(j):
            column = basis[i][2]
            low, _ = column[row].split(val)
            factor = _high_part(column[row], val, trunc)
            if not factor.is_zero():
                basis[i][2] = _eliminate(column, pivot, factor, row, low)

    # the zero lattice has no power of b to carry
    shift = lattice.shift if basis else 0
    pivots = [(row, val) for row, val, _ in basis]
    columns = [tuple(column) for _, _, column in basis]
    if normalize and columns:
        common = min(vector_valuation(c) for c in columns)
        if 0 < common < math.inf:
            columns = [tuple(x.divide_b_power(common) for x in c) for c in columns]
            pivots = [(row, val - common) for row, val in pivots]
            shift += common
            trunc -= common

    if full_rank and sum(v for _, v in pivots) >= trunc:
        raise PrecisionExhausted(
            f"pivot valuations {[v for _, v in pivots]} exhaust precision {trunc}",
            precision=trunc,
        )
    generators = SeriesMatrix.from_columns(columns, size, trunc)
    return Lattice(generators, shift=shift, canonical=True, pivots=tuple(pivots))


def _ensure_canonical(lattice, full_rank=False):
    if lattice.canonical and not full_rank:
        return lattice
    if lattice.canonical and full_rank:
        if lattice.rank != lattice.ambient_rank or lattice.pivot_sum() >= lattice.precision:
            raise PrecisionExhausted(
                "lattice is not certified of full rank", precision=lattice.precision
            )
        return lattice
    return canonical_form(lattice, full_rank=full_rank)


def reduce_vector(vector, lattice):
    """Remainder of a vector modulo a canonical lattice.

    The vector is given relative to b^shift. The map is Q-linear and the
    remainder vanishes exactly when the vector lies in span(generators).
    In every pivot row the remainder has degree < v_j.
    """
    lattice = _ensure_canonical(lattice)
    trunc = min(lattice.precision, min((x.trunc for x in vector), default=lattice.precision))
    out = list(vector_with_trunc(vector, trunc))
    for (row, val), pivot in zip(lattice.pivots, lattice.columns()):
        low, _ = out[row].split(val)
        factor = _high_part(out[row], val, trunc)
        if not factor.is_zero():
            pivot = vector_with_trunc(pivot, trunc)
            out = _eliminate(out, pivot, factor, row, low)
    return tuple(out)


def member(vector, lattice):
    """True when an absolute vector lies in the lattice at working precision"""
    lattice = _ensure_canonical(lattice)
    shift = lattice.shift
    if shift <= 0:
        relative = vector_shift(vector, -shift)
    else:
        if vector_valuation(vector) < shift:
            return False
        relative = tuple(x.divide_b_power(shift) for x in vector)
    return vector_is_zero(reduce_vector(relative, lattice))


def _align(lattices):
    # common shift and precision for a list of lattices
    shift = min(lat.shift for lat in lattices)
    trunc = min(lat.precision for lat in lattices)
    matrices = [
        lat.generators.shift(lat.shift - shift).with_trunc(trunc) for lat in lattices
    ]
    return shift, trunc, matrices


def lattice_sum(*lattices, full_rank=False):
    """Canonical form of L1 + L2 + ..."""
    shift, trunc, matrices = _align(lattices)
    stacked = matrices[0]
    for matrix in matrices[1:]:
        stacked = stacked.hstack(matrix)
    return canonical_form(Lattice(stacked, shift=shift), full_rank=full_rank)


def scale_lattice(lattice, power):
    """b^power * L"""
    return Lattice(
        lattice.generators,
        shift=lattice.shift + power,
        canonical=lattice.canonical,
        pivots=lattice.pivots,
    )


def lattice_equal(first, second):
    """Equality of lattices: identical canonical forms at common precision"""
    first = _ensure_canonical(first)
    second = _ensure_canonical(second)
    if first.shift != second.shift or first.pivots != second.pivots:
        return False
    trunc = min(first.precision, second.precision)
    return first.generators.with_trunc(trunc) == second.generators.with_trunc(trunc)


def is_sublattice(small, big):
    """True when small is contained in big"""
    return lattice_equal(lattice_sum(small, big), big)


def preimage(matrix, source, target):
    """Pre-image {x in source : matrix x in target}.

    Write x = b^s1 G1 y. With W = matrix G1 and target = b^s2 span(H) the
    condition reads W y in b^(s2 - s1) span(H) (after moving a negative
    difference onto W). The target contains b^c times the standard lattice
    where c is the sum of its pivot valuations, so y only matters modulo
    b^c and the condition becomes a rational linear system on the
    coefficients of y below order c.

    :param SeriesMatrix matrix: k' x k matrix
    :param Lattice source: lattice in the rank k module
    :param Lattice target: full rank lattice in the rank k' module
    :return: canonical lattice in the rank k module
    :rtype: Lattice
    """
    source = _ensure_canonical(source)
    target = _ensure_canonical(target, full_rank=True)
    difference = target.shift - source.shift

    images = matrix @ source.generators
    relative = target.generators
    if difference >= 0:
        relative = relative.shift(difference)
    else:
        images = images.shift(-difference)
    trunc = min(images.trunc, relative.trunc, source.precision)
    images = images.with_trunc(trunc)
    relative = canonical_form(
        Lattice(relative.with_trunc(trunc)), full_rank=True, normalize=False
    )
    bound = relative.pivot_sum()
    rank = source.rank
    if bound >= trunc:
        raise PrecisionExhausted(
            f"pre-image needs {bound} orders but only {trunc} are known", precision=trunc
        )

    generators = []
    if bound > 0:
        # remainder coordinates of b^t * images[:, j] for t < bound
        columns = []
        for j in range(rank):
            image = images.column(j)
            for t in range(bound):
                remainder = reduce_vector(vector_shift(image, t), relative)
                columns.append(
                    [remainder[row][i] for row, val in relative.pivots for i in range(val)]
                )
        system = sympy.Matrix(columns).T
        for null in system.nullspace():
            values = [to_fraction(x) for x in null]
            generators.append(
                tuple(
                    Series(values[j * bound:(j + 1) * bound], trunc) for j in range(rank)
                )
            )
    for j in range(rank):
        generators.append(
            tuple(
                Series.monomial(bound, trunc) if i == j else Series.zero(trunc)
                for i in range(rank)
            )
        )
    solutions = canonical_form(
        Lattice(SeriesMatrix.from_columns(generators, rank, trunc))
    )
    result = Lattice(
        source.generators.with_trunc(solutions.precision) @ solutions.generators,
        shift=source.shift + solutions.shift,
    )
    return canonical_form(result)


@dataclass(frozen=True)
class QuotientBasis:
    """Rational basis of L / bL given by the canonical generators"""

    shift: int
    vectors: Tuple[Tuple[Series, ...], ...]

    @property
    def dimension(self):
        return len(self.vectors)


def quotient_mod_b(lattice):
    lattice = _ensure_canonical(lattice)
    return QuotientBasis(shift=lattice.shift, vectors=tuple(lattice.columns()))
