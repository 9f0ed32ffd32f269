# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..linalg.lattice import (
    Lattice,
    QuotientBasis,
    canonical_form,
    is_sublattice,
    lattice_equal,
    lattice_sum,
    member,
    preimage,
    quotient_mod_b,
    reduce_vector,
    scale_lattice,
    standard_lattice,
)
from ..linalg.matrix import SeriesMatrix, standard_vector, to_rational, zero_vector
from ..linalg.polynomial import (
    RationalPolynomial,
    characteristic_polynomial,
    evaluate_at_matrix,
    minimal_polynomial,
)

__all__ = [
    "SeriesMatrix",
    "standard_vector",
    "zero_vector",
    "to_rational",
    "Lattice",
    "QuotientBasis",
    "canonical_form",
    "standard_lattice",
    "reduce_vector",
    "member",
    "lattice_sum",
    "lattice_equal",
    "is_sublattice",
    "scale_lattice",
    "preimage",
    "quotient_mod_b",
    "RationalPolynomial",
    "characteristic_polynomial",
    "evaluate_at_matrix",
    "minimal_polynomial",
]
