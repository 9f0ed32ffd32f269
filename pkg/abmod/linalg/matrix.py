# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import math

import sympy

from ..series import Series, to_fraction


def to_rational(value):
    """Fraction (or int) to sympy Rational"""
    value = to_fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def zero_vector(size, trunc):
    return tuple(Series.zero(trunc) for _ in range(size))


def standard_vector(size, index, trunc):
    return tuple(
        Series.one(trunc) if i == index else Series.zero(trunc) for i in range(size)
    )


def vector_trunc(vector):
    """Common truncation of a vector, math.inf for the empty vector"""
    return min((x.trunc for x in vector), default=math.inf)


def vector_add(x, y):
    return tuple(u + v for u, v in zip(x, y))


def vector_sub(x, y):
    return tuple(u - v for u, v in zip(x, y))


def vector_shift(x, k):
    return tuple(u.shift(k) for u in x)


def vector_with_trunc(x, trunc):
    return tuple(u.with_trunc(trunc) for u in x)


def vector_valuation(x):
    return min((u.valuation() for u in x), default=math.inf)


def vector_is_zero(x):
    return all(u.is_zero() for u in x)


def vector_derivative(x):
    return tuple(u.derivative() for u in x)


class SeriesMatrix:
    """Rectangular matrix of series with a uniform truncation order.

    Rows are stored as tuples of Series. Shape and truncation are kept
    explicitly so that empty matrices (0 x m, k x 0) are well defined.
    """

    __slots__ = ("_rows", "_shape", "_trunc")

    def __init__(self, rows, shape=None, trunc=None):
        rows = tuple(tuple(row) for row in rows)
        if shape is None:
            shape = (len(rows), len(rows[0]) if rows else 0)
        nrows, ncols = shape
        if len(rows) != nrows or any(len(row) != ncols for row in rows):
            raise ValueError(f"rows do not match shape {shape}")
        entries = [x for row in rows for x in row]
        if any(not isinstance(x, Series) for x in entries):
            raise TypeError("matrix entries should be Series")
        if trunc is None:
            if not entries:
                raise ValueError("truncation order is required for an empty matrix")
            trunc = min(x.trunc for x in entries)
        self._rows = tuple(tuple(x.with_trunc(trunc) for x in row) for row in rows)
        self._shape = (nrows, ncols)
        self._trunc = trunc

    @classmethod
    def zeros(cls, nrows, ncols, trunc):
        return cls(
            [[Series.zero(trunc)] * ncols for _ in range(nrows)], (nrows, ncols), trunc
        )

    @classmethod
    def identity(cls, size, trunc):
        return cls.diagonal([Series.one(trunc)] * size, trunc)

    @classmethod
    def diagonal(cls, entries, trunc=None):
        entries = list(entries)
        if trunc is None:
            trunc = min(x.trunc for x in entries)
        size = len(entries)
        rows = [
            [entries[i] if i == j else Series.zero(trunc) for j in range(size)]
            for i in range(size)
        ]
        return cls(rows, (size, size), trunc)

    @classmethod
    def from_columns(cls, columns, nrows, trunc=None):
        """Matrix whose j-th column is columns[j] (a tuple of nrows series)"""
        columns = [tuple(c) for c in columns]
        if trunc is None:
            trunc = min((vector_trunc(c) for c in columns), default=math.inf)
            if trunc == math.inf:
                raise ValueError("truncation order is required for an empty matrix")
        rows = [[c[i] for c in columns] for i in range(nrows)]
        return cls(rows, (nrows, len(columns)), trunc)

    @classmethod
    def from_coefficients(cls, matrices, trunc):
        """Matrix sum_t matrices[t] * b^t from rational (sympy) matrices"""
        matrices = [sympy.Matrix(m) for m in matrices]
        nrows, ncols = matrices[0].shape
        rows = [
            [Series([m[i, j] for m in matrices], trunc) for j in range(ncols)]
            for i in range(nrows)
        ]
        return cls(rows, (nrows, ncols), trunc)

    @property
    def shape(self):
        return self._shape

    @property
    def nrows(self):
        return self._shape[0]

    @property
    def ncols(self):
        return self._shape[1]

    @property
    def trunc(self):
        return self._trunc

    @property
    def rows(self):
        return self._rows

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def column(self, j):
        return tuple(row[j] for row in self._rows)

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def __eq__(self, other):
        if not isinstance(other, SeriesMatrix):
            return NotImplemented
        return (
            self._shape == other._shape
            and self._trunc == other._trunc
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self._shape, self._trunc, self._rows))

    def __repr__(self):
        body = ", ".join(
            "[" + ", ".join(str(x) for x in row) + "]" for row in self._rows
        )
        return f"SeriesMatrix([{body}], trunc={self._trunc})"

    def map(self, func, trunc=None):
        rows = [[func(x) for x in row] for row in self._rows]
        if trunc is None:
            trunc = min((x.trunc for row in rows for x in row), default=self._trunc)
        return SeriesMatrix(rows, self._shape, trunc)

    def _check_same_shape(self, other):
        if self._shape != other.shape:
            raise ValueError(f"shape mismatch: {self._shape} and {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        trunc = min(self._trunc, other.trunc)
        rows = [
            [x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self._rows, other.rows)
        ]
        return SeriesMatrix(rows, self._shape, trunc)

    def __sub__(self, other):
        self._check_same_shape(other)
        trunc = min(self._trunc, other.trunc)
        rows = [
            [x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self._rows, other.rows)
        ]
        return SeriesMatrix(rows, self._shape, trunc)

    def __neg__(self):
        return self.map(lambda x: -x, self._trunc)

    def scale(self, factor):
        """Multiply every entry by a series or a rational number"""
        trunc = self._trunc
        if isinstance(factor, Series):
            trunc = min(trunc, factor.trunc)
        return self.map(lambda x: x * factor, trunc)

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self._shape} by {other.shape}")
        trunc = min(self._trunc, other.trunc)
        zero = Series.zero(trunc)
        other_columns = other.columns()
        rows = []
        for row in self._rows:
            out = []
            for col in other_columns:
                acc = zero
                for x, y in zip(row, col):
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y
                out.append(acc)
            rows.append(out)
        return SeriesMatrix(rows, (self.nrows, other.ncols), trunc)

    def apply(self, vector):
        """Matrix times a column vector (tuple of series)"""
        trunc = min(self._trunc, vector_trunc(vector))
        if trunc == math.inf:
            trunc = self._trunc
        zero = Series.zero(trunc)
        out = []
        for row in self._rows:
            acc = zero
            for x, y in zip(row, vector):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            out.append(acc.with_trunc(trunc))
        return tuple(out)

    def transpose(self):
        rows = [list(col) for col in self.columns()]
        return SeriesMatrix(rows, (self.ncols, self.nrows), self._trunc)

    @property
    def T(self):
        return self.transpose()

    def kron(self, other):
        """Kronecker product, block (i, j) is self[i, j] * other"""
        trunc = min(self._trunc, other.trunc)
        p, q = other.shape
        rows = []
        for i in range(self.nrows):
            for k in range(p):
                rows.append(
                    [
                        self._rows[i][j] * other[k, m]
                        for j in range(self.ncols)
                        for m in range(q)
                    ]
                )
        return SeriesMatrix(rows, (self.nrows * p, self.ncols * q), trunc)

    def hstack(self, other):
        if self.nrows != other.nrows:
            raise ValueError("hstack needs the same number of rows")
        trunc = min(self._trunc, other.trunc)
        rows = [r1 + r2 for r1, r2 in zip(self._rows, other.rows)]
        return SeriesMatrix(rows, (self.nrows, self.ncols + other.ncols), trunc)

    def block_diag(self, other):
        trunc = min(self._trunc, other.trunc)
        zero = Series.zero(trunc)
        rows = [list(row) + [zero] * other.ncols for row in self._rows]
        rows += [[zero] * self.ncols + list(row) for row in other.rows]
        return SeriesMatrix(
            rows, (self.nrows + other.nrows, self.ncols + other.ncols), trunc
        )

    def subs_neg(self):
        """Entrywise b -> -b"""
        return self.map(Series.subs_neg, self._trunc)

    def derivative(self):
        """Entrywise derivative, known modulo b^(trunc - 1)"""
        return self.map(Series.derivative, max(self._trunc - 1, 0))

    def shift(self, k):
        """Multiply by b^k, k >= 0"""
        return self.map(lambda x: x.shift(k), self._trunc + k)

    def with_trunc(self, trunc):
        if trunc == self._trunc:
            return self
        return self.map(lambda x: x.with_trunc(trunc), trunc)

    def coefficient(self, power):
        """Rational matrix of the coefficients of b^power"""
        if self.nrows == 0 or self.ncols == 0:
            return sympy.zeros(self.nrows, self.ncols)
        return sympy.Matrix(
            self.nrows,
            self.ncols,
            lambda i, j: to_rational(self._rows[i][j][power])
            if power < self._trunc
            else 0,
        )

    def constant_term(self):
        return self.coefficient(0)

    def valuation(self):
        return min(
            (x.valuation() for row in self._rows for x in row), default=math.inf
        )

    def is_zero(self):
        return all(x.is_zero() for row in self._rows for x in row)

    def is_square(self):
        return self.nrows == self.ncols
