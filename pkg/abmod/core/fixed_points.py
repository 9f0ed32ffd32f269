# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import logging
from dataclasses import dataclass

from ..config import iteration_cap
from ..errors import AbModuleError, IterationCap, NotFullRank, NotRegular
from ..linalg.lattice import (
    Lattice,
    canonical_form,
    lattice_equal,
    member,
    preimage,
    standard_lattice,
)
from ..linalg.matrix import SeriesMatrix
from .module import AbModule, apply_a_shifted, is_simple_pole
from .precision import check_cancelled, working_trunc

logger = logging.getLogger()


@dataclass(frozen=True)
class SubModuleResult:
    """An a-stable lattice together with its intrinsic (a,b)-module.

    The inclusion into the ambient module is b^shift times the generator
    matrix of the lattice.
    """

    module: AbModule
    lattice: Lattice
    iterations: int
    full_rank: bool = True

    @property
    def shift(self):
        return self.lattice.shift

    @property
    def inclusion(self):
        return self.lattice.generators


def shifted_images(module, lattice):
    """Matrix of a(b^s g_j) / b^s for the generators g_j of a lattice"""
    shift = lattice.shift
    trunc = min(module.trunc, lattice.precision)
    columns = [apply_a_shifted(module, g, shift) for g in lattice.columns()]
    return SeriesMatrix.from_columns(columns, module.rank, trunc)


def intrinsic_module(module, lattice, name=""):
    """a-matrix of an a-stable canonical lattice in its own generators.

    Solves G M = a(G) row by row on the pivot rows: row p_j of G is
    b^v_j at column j and vanishes right of it, so M is found by forward
    substitution and one division by b^v_j per row.

    :raises AbModuleError: when the lattice is not a-stable
    """
    images = shifted_images(module, lattice)
    gens = lattice.generators
    size = lattice.rank
    rows = []
    for j, (pivot_row, val) in enumerate(lattice.pivots):
        row = []
        for c in range(size):
            rhs = images[pivot_row, c]
            for i in range(j):
                rhs = rhs - gens[pivot_row, i] * rows[i][c]
            try:
                row.append(rhs.divide_b_power(val))
            except ValueError:
                raise AbModuleError("lattice is not stable under a")
        rows.append(row)
    trunc = min((x.trunc for row in rows for x in row), default=lattice.precision)
    return AbModule(SeriesMatrix(rows, (size, size), trunc), name)


def _working_module(module, trunc):
    return module.with_trunc(working_trunc(module, trunc))


def _suffixed(module, suffix):
    return f"{module.name}{suffix}" if module.name else ""


def _unchanged(module, suffix):
    # a simple pole module is its own saturation and its own F
    lattice = standard_lattice(module.rank, module.trunc)
    return SubModuleResult(module.renamed(_suffixed(module, suffix)), lattice, 0)


def saturate(module, trunc=None, max_iter=None, cancel=None):
    """Smallest lattice containing E that is stable under b^-1 a.

    Iterates L <- L + b^-1 a(L) from the standard lattice. Every step either
    grows the lattice or certifies the fixed point.
    A simple pole module, rank 0 included, is returned as it is.

    :param AbModule module: the module E
    :param int trunc: working precision (optional)
    :param int max_iter: iteration cap, default 2 * rank + 4
    :param threading.Event cancel: checked between iterations (optional)
    :return: saturation with its simple pole intrinsic module
    :rtype: SubModuleResult
    :raises NotRegular: when the cap is exceeded
    :raises PrecisionExhausted: when the working precision is too low
    """
    module = _working_module(module, trunc)
    size = module.rank
    check_cancelled(cancel)
    if is_simple_pole(module):
        return _unchanged(module, "~")
    cap = max_iter if max_iter is not None else iteration_cap(size)
    lattice = standard_lattice(size, module.trunc)

    growth = 0
    while True:
        check_cancelled(cancel)
        images = shifted_images(module, lattice)
        candidate = Lattice(
            lattice.generators.shift(1).with_trunc(images.trunc).hstack(images),
            shift=lattice.shift - 1,
        )
        candidate = canonical_form(candidate, full_rank=True)
        if lattice_equal(candidate, lattice):
            break
        growth += 1
        if growth > cap:
            raise NotRegular(
                f"saturation of {module!r} did not stabilize after {cap} iterations",
                cap=cap,
            )
        lattice = candidate

    logger.debug(f"saturation of {module!r} stable after {growth} iterations")
    sat = intrinsic_module(module, lattice, _suffixed(module, "~"))
    return SubModuleResult(sat, lattice, growth)


def is_regular(module, trunc=None, max_iter=None):
    """True when the saturation stabilizes within the iteration cap"""
    try:
        saturate(module, trunc=trunc, max_iter=max_iter)
    except NotRegular:
        return False
    return True


def biggest_simple_pole_sub(module, trunc=None, max_iter=None, cancel=None):
    """Biggest sub-lattice F of E with a.F contained in b.F.

    Iterates F <- {x in F : a(x) in b.F} from the standard lattice, every
    step being a lattice pre-image. The returned lattice is certified by
    one extra step that gives it back unchanged.
    A simple pole module is returned as it is.

    :param AbModule module: a regular module E
    :return: F with its simple pole intrinsic module
    :rtype: SubModuleResult
    :raises IterationCap: when the decreasing chain does not stabilize
    """
    module = _working_module(module, trunc)
    size = module.rank
    check_cancelled(cancel)
    if is_simple_pole(module):
        return _unchanged(module, "^")
    cap = max_iter if max_iter is not None else iteration_cap(size)
    lattice = standard_lattice(size, module.trunc)

    steps = 0
    while True:
        check_cancelled(cancel)
        images = shifted_images(module, lattice)
        target = Lattice(lattice.generators, shift=1, canonical=True, pivots=lattice.pivots)
        if all(member(c, target) for c in images.columns()):
            break
        solutions = preimage(
            images,
            standard_lattice(lattice.rank, images.trunc),
            target,
        )
        candidate = canonical_form(
            Lattice(
                lattice.generators.with_trunc(solutions.precision) @ solutions.generators,
                shift=lattice.shift + solutions.shift,
            ),
            full_rank=True,
        )
        if lattice_equal(candidate, lattice):
            break
        steps += 1
        if steps > cap:
            raise IterationCap(
                f"simple pole submodule of {module!r} did not stabilize after {cap} iterations"
            )
        lattice = candidate

    logger.debug(f"simple pole submodule of {module!r} stable after {steps} iterations")
    sub = intrinsic_module(module, lattice, _suffixed(module, "^"))
    return SubModuleResult(sub, lattice, steps)


def submodule_closure(
    module, generators, require_full_rank=False, trunc=None, max_iter=None, cancel=None
):
    """Smallest a-stable lattice containing the given vectors.

    :param AbModule module: the ambient module
    :param list generators: vectors (tuples of series) in standard coordinates
    :param bool require_full_rank: raise NotFullRank instead of warning
    :return: closure with its intrinsic module
    :rtype: SubModuleResult
    """
    module = _working_module(module, trunc)
    size = module.rank
    vectors = [tuple(x.with_trunc(module.trunc) for x in g) for g in generators]
    lattice = canonical_form(
        Lattice(SeriesMatrix.from_columns(vectors, size, module.trunc))
    )
    cap = max_iter if max_iter is not None else iteration_cap(size) + lattice.pivot_sum()

    steps = 0
    while True:
        check_cancelled(cancel)
        images = shifted_images(module, lattice)
        candidate = canonical_form(
            Lattice(
                lattice.generators.with_trunc(images.trunc).hstack(images),
                shift=lattice.shift,
            )
        )
        if lattice_equal(candidate, lattice):
            break
        steps += 1
        if steps > cap:
            raise IterationCap(f"closure did not stabilize after {cap} iterations")
        lattice = candidate

    full_rank = lattice.rank == size
    if not full_rank:
        if require_full_rank:
            raise NotFullRank(f"closure has rank {lattice.rank} < {size}")
        logger.warning(f"closure has rank {lattice.rank} < {size}")
    sub = intrinsic_module(module, lattice)
    return SubModuleResult(sub, lattice, steps, full_rank=full_rank)


def series_coordinates(result, vector):
    """Ambient coordinates b^shift G y of a vector y given in lattice coordinates"""
    gens = result.lattice.generators
    trunc = min(gens.trunc, min((x.trunc for x in vector), default=gens.trunc))
    image = gens.with_trunc(trunc).apply(tuple(x.with_trunc(trunc) for x in vector))
    shift = result.lattice.shift
    if shift < 0:
        raise ValueError("lattice with negative shift has no series coordinates")
    return tuple(x.shift(shift) for x in image)
