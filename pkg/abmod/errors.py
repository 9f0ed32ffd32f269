# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License


class AbModuleError(Exception):
    """Base class of all errors raised by abmod."""


class NotAUnit(AbModuleError, ArithmeticError):
    """Inversion of a power series whose constant term vanishes."""


class PrecisionExhausted(AbModuleError):
    """A result cannot be certified at the working precision.

    :param str msg: description of what could not be certified
    :param int precision: the precision (in powers of b) that was reached
    """

    def __init__(self, msg, precision=None):
        super().__init__(msg)
        self.precision = precision


class NotRegular(AbModuleError):
    """The saturation did not stabilize within the iteration cap.

    The cap is a certificate boundary: hitting it says nothing definitive
    about the mathematical regularity of the module.
    """

    def __init__(self, msg, cap=None):
        super().__init__(msg)
        self.cap = cap


class IterationCap(AbModuleError):
    """A decreasing fixed point did not stabilize within the iteration cap."""


class NotSimplePole(AbModuleError):
    """The operation needs a module with a·E ⊆ b·E."""


class NotMinimalInClass(AbModuleError):
    """beta - m is a spectral value for some integer m >= 1."""

    def __init__(self, msg, eigenvalue=None):
        super().__init__(msg)
        self.eigenvalue = eigenvalue


class NoSuchBlock(AbModuleError):
    """The residue endomorphism has no Jordan block of the requested size."""


class NotFound(AbModuleError):
    """A certificate search failed at the given precision (inconclusive)."""

    def __init__(self, msg, precision=None, precision_caveat=False):
        super().__init__(msg)
        self.precision = precision
        self.precision_caveat = precision_caveat


class NotFullRank(AbModuleError):
    """A sub-lattice has rank smaller than its ambient module."""


class GenerationFailed(AbModuleError):
    """Random module generation gave up after the retry bound."""


class Cancelled(AbModuleError):
    """A long running fixed point was interrupted between iterations."""


class ParseError(AbModuleError, ValueError):
    """Malformed series text or module description.

    :param str msg: what went wrong
    :param int line: 1-based line of the offending input (optional)
    :param int column: 1-based column of the offending input (optional)
    """

    def __init__(self, msg, line=None, column=None):
        location = ""
        if line is not None and column is not None:
            location = f" (line {line}, column {column})"
        elif column is not None:
            location = f" (column {column})"
        super().__init__(msg + location)
        self.line = line
        self.column = column
