# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from ..config import config, default_trunc, profiles
from ..core.fixed_points import saturate, submodule_closure
from ..core.module import AbModule
from ..errors import (
    GenerationFailed,
    IterationCap,
    NotFullRank,
    NotRegular,
    PrecisionExhausted,
)
from ..linalg.matrix import SeriesMatrix
from ..series import Series, format_rational, to_fraction

logger = logging.getLogger()


def e_lambda(value, trunc=None):
    """Rank one module with a.e = value.b.e"""
    value = to_fraction(value)
    trunc = trunc or default_trunc(1)
    matrix = SeriesMatrix([[Series.monomial(1, trunc, value)]], (1, 1), trunc)
    return AbModule(matrix, f"E_{format_rational(value)}")


def jordan_module(beta, d, trunc=None):
    """Rank d module with a.e_j = beta.b.e_j + b.e_(j-1)"""
    beta = to_fraction(beta)
    trunc = trunc or default_trunc(d)
    rows = [[Series.zero(trunc)] * d for _ in range(d)]
    for j in range(d):
        rows[j][j] = Series.monomial(1, trunc, beta)
        if j > 0:
            rows[j - 1][j] = Series.monomial(1, trunc)
    return AbModule(SeriesMatrix(rows, (d, d), trunc), f"J({format_rational(beta)},{d})")


@dataclass(frozen=True)
class PhamSpec:
    """Exponents (a_1, ..., a_n) of the Pham polynomial x_1^a_1 + ... + x_n^a_n"""

    exponents: Tuple[int, ...]

    def __post_init__(self):
        if not self.exponents or any(a < 2 for a in self.exponents):
            raise ValueError(f"Pham exponents should be at least 2, got {self.exponents}")

    @property
    def n(self):
        return len(self.exponents)

    @property
    def milnor_number(self):
        return int(np.prod([a - 1 for a in self.exponents]))

    def monomials(self):
        """Monomial basis exponents of the Jacobian algebra"""
        return list(itertools.product(*[range(a - 1) for a in self.exponents]))

    def spectrum(self):
        """sigma(alpha) = sum_i (alpha_i + 1) / a_i for every basis monomial"""
        return [
            sum(Fraction(al + 1, a) for al, a in zip(alpha, self.exponents))
            for alpha in self.monomials()
        ]


def pham(exponents, trunc=None):
    """Diagonal simple pole module of a Pham singularity, a = diag(sigma.b)"""
    spec = exponents if isinstance(exponents, PhamSpec) else PhamSpec(tuple(exponents))
    sigma = spec.spectrum()
    trunc = trunc or default_trunc(len(sigma))
    matrix = SeriesMatrix.diagonal([Series.monomial(1, trunc, s) for s in sigma], trunc)
    return AbModule(matrix, "pham(" + ",".join(str(a) for a in spec.exponents) + ")")


def _random_rational(rng, height):
    return Fraction(int(rng.randint(-height, height + 1)), int(rng.randint(1, height + 1)))


def _simple_pole_start(rng, size, trunc, upper, height):
    rows = [[Series.zero(trunc)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = Series.monomial(1, trunc, _random_rational(rng, height))
        if upper:
            for j in range(i + 1, size):
                rows[i][j] = Series(
                    [0, int(rng.randint(-height, height + 1)), int(rng.randint(-height, height + 1))],
                    trunc,
                )
    return AbModule(SeriesMatrix(rows, (size, size), trunc))


def _random_generators(rng, size, trunc, height, max_valuation):
    generators = []
    for _ in range(size):
        vector = []
        for _ in range(size):
            power = int(rng.randint(0, max_valuation + 1))
            low = [int(rng.randint(-height, height + 1)) for _ in range(2)]
            vector.append(Series([0] * power + low, trunc))
        generators.append(tuple(vector))
    return generators


def random_regular(k, seed, trunc=None, profile="default"):
    """Deterministic pseudo-random regular module of rank k.

    A random simple pole module b.D + b.U (D diagonal, U strictly upper
    triangular) is regular; the a-stable closure of k random vectors in it
    is again regular and usually not a simple pole module.

    :param int k: rank
    :param int seed: seed of the numpy random state
    :param int trunc: truncation of the returned module
    :param str profile: "default", "diagonal" or "simple_pole"
    :return: the module
    :rtype: AbModule
    :raises GenerationFailed: when no full rank closure with a certified saturation was found
    """
    if profile not in profiles:
        raise ValueError(f"unknown profile {profile!r}, use one of {sorted(profiles)}")
    settings = profiles[profile]
    trunc = trunc or default_trunc(k)
    height = config["height_bound"]
    rng = np.random.RandomState(seed)
    name = f"random({k},{seed})"

    for attempt in range(config["generation_retries"]):
        start = _simple_pole_start(rng, k, 2 * trunc, settings["upper"], height)
        if not settings["closure"] or k == 0:
            return start.with_trunc(trunc).renamed(name)
        generators = _random_generators(rng, k, 2 * trunc, height, config["max_valuation"])
        try:
            closure = submodule_closure(start, generators, require_full_rank=True)
            module = closure.module.with_trunc(trunc).renamed(name)
            # the saturation must stabilize within the default cap
            saturate(module)
        except (NotFullRank, PrecisionExhausted, IterationCap, NotRegular) as exc:
            logger.debug(f"attempt {attempt} for {name} rejected: {exc}")
            continue
        return module
    raise GenerationFailed(
        f"no full rank module found for rank {k} and seed {seed} "
        f"after {config['generation_retries']} attempts"
    )
