# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from dataclasses import dataclass

from ..errors import NotSimplePole
from ..linalg.matrix import SeriesMatrix, vector_add, vector_derivative, vector_shift


@dataclass(frozen=True)
class AbModule:
    """Free (a,b)-module of finite rank in its standard basis.

    Column j of a_matrix holds the coordinates of a(e_j). On a general
    element x = sum_j x_j e_j the action is a(x) = A x + b^2 x', so
    a.b - b.a = b^2 holds by construction. Entries are treated as
    polynomials: raising the truncation pads them with zeros.
    """

    a_matrix: SeriesMatrix
    name: str = ""

    def __post_init__(self):
        if not self.a_matrix.is_square():
            raise ValueError(f"a-matrix should be square, got shape {self.a_matrix.shape}")

    @property
    def rank(self):
        return self.a_matrix.nrows

    @property
    def trunc(self):
        return self.a_matrix.trunc

    def with_trunc(self, trunc):
        return AbModule(self.a_matrix.with_trunc(trunc), self.name)

    def renamed(self, name):
        return AbModule(self.a_matrix, name)

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"AbModule({label}rank={self.rank}, trunc={self.trunc})"


def apply_a(module, vector):
    """a(x) = A x + b^2 x' for a vector of series in standard coordinates"""
    linear = module.a_matrix.apply(vector)
    derivative = vector_shift(vector_derivative(vector), 2)
    return vector_add(linear, derivative)


def apply_a_shifted(module, vector, shift):
    """Coordinates of a(b^shift x) relative to b^shift: a(x) + shift.b.x"""
    image = apply_a(module, vector)
    if shift == 0:
        return image
    return vector_add(image, tuple(x.shift(1) * shift for x in vector))


def is_simple_pole(module):
    """True when a.E is contained in b.E"""
    return module.a_matrix.constant_term().is_zero_matrix


def residue_endomorphism(module):
    """Rational matrix of b^-1 a acting on E / bE.

    :raises NotSimplePole: when the a-matrix does not vanish at b = 0
    """
    if not is_simple_pole(module):
        raise NotSimplePole(f"{module!r} does not have a simple pole")
    return module.a_matrix.coefficient(1)


def direct_sum(first, second):
    """E + F with block diagonal a-matrix"""
    name = f"{first.name}+{second.name}" if first.name and second.name else ""
    return AbModule(first.a_matrix.block_diag(second.a_matrix), name)
