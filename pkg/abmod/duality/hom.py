# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..constructors.factories import e_lambda
from ..core.module import AbModule
from ..linalg.matrix import SeriesMatrix
from ..series import Series


def e_delta(delta, trunc=None):
    """Rank one module E_delta used as dualizing object"""
    return e_lambda(delta, trunc)


def twist(module):
    """The module with a-matrix -A(-b)"""
    name = f"{module.name}^v" if module.name else ""
    return AbModule(-module.a_matrix.subs_neg(), name)


def hom_ab(source, target):
    """Internal Hom(E, F) with (a.phi)(x) = a(phi(x)) - phi(a(x)).

    The basis is the row-major family of matrix units phi_ij mapping e_j of
    E to e_i of F, phi_ij has index i * rank(E) + j. In that basis the
    a-matrix is A_F (x) I - I (x) A_E^T.
    """
    trunc = min(source.trunc, target.trunc)
    a_source = source.a_matrix.with_trunc(trunc)
    a_target = target.a_matrix.with_trunc(trunc)
    left = a_target.kron(SeriesMatrix.identity(source.rank, trunc))
    right = SeriesMatrix.identity(target.rank, trunc).kron(a_source.transpose())
    name = f"Hom({source.name},{target.name})" if source.name and target.name else ""
    return AbModule(left - right, name)


def vector_to_map(vector, source_rank, target_rank):
    """Coordinates in the Hom basis to a target_rank x source_rank matrix"""
    rows = [
        [vector[i * source_rank + j] for j in range(source_rank)] for i in range(target_rank)
    ]
    trunc = min((x.trunc for x in vector), default=None)
    if trunc is None:
        raise ValueError("cannot build a map from an empty vector without truncation")
    return SeriesMatrix(rows, (target_rank, source_rank), trunc)


def map_to_vector(matrix):
    """Inverse of vector_to_map"""
    return tuple(x for row in matrix.rows for x in row)


def hom_basis(source, target, trunc=None):
    """The matrix units phi_ij in Hom basis order"""
    trunc = trunc or min(source.trunc, target.trunc)
    units = []
    for i in range(target.rank):
        for j in range(source.rank):
            rows = [
                [Series.one(trunc) if (r, c) == (i, j) else Series.zero(trunc)
                 for c in range(source.rank)]
                for r in range(target.rank)
            ]
            units.append(SeriesMatrix(rows, (target.rank, source.rank), trunc))
    return units
