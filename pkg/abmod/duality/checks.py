# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

import numpy as np

from ..config import config
from ..core.bernstein import (
    bernstein,
    bernstein_of_simple_pole,
    predict_poles,
    spectral_classes,
)
from ..core.fixed_points import biggest_simple_pole_sub, saturate
from ..core.module import is_simple_pole
from ..core.precision import with_precision_retry, working_trunc
from ..errors import NotFound
from ..linalg.matrix import SeriesMatrix
from ..series import Series, to_fraction
from .hom import e_delta, hom_ab, hom_basis, twist
from .morphisms import IsomorphismCertificate, morphism_space, verify_isomorphism

logger = logging.getLogger()


def verify_twist_hom(source, target):
    """Check twist(Hom(E, F)) == Hom(twist(E), twist(F)) on a-matrices, bit for bit"""
    left = twist(hom_ab(source, target)).a_matrix
    right = hom_ab(twist(source), twist(target)).a_matrix
    return left == right


def bidual_map(module, delta):
    """The evaluation map E -> Hom(Hom(E, E_delta), E_delta), x -> (phi -> phi(x))"""
    trunc = module.trunc
    dualizing = e_delta(delta, trunc)
    functionals = hom_basis(module, dualizing, trunc)
    columns = []
    for j in range(module.rank):
        unit = tuple(
            Series.one(trunc) if i == j else Series.zero(trunc) for i in range(module.rank)
        )
        columns.append(tuple(phi.apply(unit)[0] for phi in functionals))
    return SeriesMatrix.from_columns(columns, len(functionals), trunc)


def verify_bidual(module, delta):
    """Certify E ~ Hom(Hom(E, E_delta), E_delta) and equality of Bernstein polynomials"""
    delta = to_fraction(delta)
    dualizing = e_delta(delta, module.trunc)
    dual = hom_ab(module, dualizing)
    bidual = hom_ab(dual, dualizing)
    certificate = verify_isomorphism(bidual_map(module, delta), module, bidual)
    if not certificate:
        logger.info(f"evaluation map of {module!r} is not an isomorphism: {certificate}")
        return False
    return bernstein(bidual).poly == bernstein(module).poly


@dataclass(frozen=True)
class DualityCertificate:
    """Isomorphism kappa from the twisted module to its delta-dual"""

    delta: Fraction
    kappa: SeriesMatrix
    checks: Dict[str, bool] = field(default_factory=dict)
    precision: int = 0
    precision_caveat: bool = False


def _candidates(size, rng):
    # unit vectors, then a sweep over small coefficients, then random draws
    for i in range(size):
        yield tuple(1 if j == i else 0 for j in range(size))
    count = 0
    for coeffs in itertools.product(config["sweep_coefficients"], repeat=size):
        if count >= config["sweep_limit"]:
            break
        count += 1
        if sum(1 for c in coeffs if c) > 1:
            yield coeffs
    for _ in range(config["random_tries"]):
        yield tuple(int(c) for c in rng.randint(-5, 6, size=size))


@dataclass(frozen=True)
class IsomorphismSearch:
    """Outcome of an isomorphism search, falsy when nothing was found.

    precision_caveat is copied from the morphism space that was searched.
    """

    phi: Optional[SeriesMatrix] = None
    certificate: Optional[IsomorphismCertificate] = None
    precision_caveat: bool = False

    def __bool__(self):
        return self.phi is not None


def search_isomorphism(source, target, trunc=None, seed=None):
    """Look for an isomorphism in the morphism space source -> target.

    :return: the map with its certificate, falsy when no combination has a unit determinant
    :rtype: IsomorphismSearch
    """
    space = morphism_space(source, target, trunc)
    caveat = space.precision_caveat
    if not space.basis or space.source_rank != space.target_rank:
        return IsomorphismSearch(precision_caveat=caveat)
    rng = np.random.RandomState(config["seed"] if seed is None else seed)
    trunc = space.trunc
    for coeffs in _candidates(space.certified_dim, rng):
        if not any(coeffs):
            continue
        phi = SeriesMatrix.zeros(space.target_rank, space.source_rank, trunc)
        for c, basis_map in zip(coeffs, space.basis):
            if c:
                phi = phi + basis_map.scale(Fraction(c))
        certificate = verify_isomorphism(phi, source, target)
        if certificate:
            return IsomorphismSearch(phi, certificate, caveat)
    return IsomorphismSearch(precision_caveat=caveat)


def find_self_duality(module, delta, trunc=None, seed=None):
    """Search an isomorphism kappa: twist(E) -> Hom(E, E_delta).

    :param AbModule module: the module E
    :param delta: rational shift of the dualizing module
    :param int trunc: working precision (optional)
    :param int seed: seed of the randomized fallback search
    :return: certificate holding kappa
    :rtype: DualityCertificate
    :raises NotFound: when no isomorphism was found (inconclusive), carrying the
        precision caveat of the searched morphism space
    """
    delta = to_fraction(delta)
    trunc = working_trunc(module, trunc)
    module = module.with_trunc(trunc)
    dual = hom_ab(module, e_delta(delta, trunc))
    found = search_isomorphism(twist(module), dual, trunc, seed)
    if not found:
        raise NotFound(
            f"no isomorphism twist({module!r}) -> Hom({module!r}, E_{delta}) at precision {trunc}",
            precision=trunc,
            precision_caveat=found.precision_caveat,
        )
    certificate = found.certificate
    checks = {
        "residual_zero": certificate.residual_zero,
        "unit_determinant": certificate.unit_determinant,
    }
    logger.info(f"{module!r} is {delta}-self-dual")
    return DualityCertificate(
        delta, found.phi, checks, certificate.precision, found.precision_caveat
    )


def reflection_check(b_poly, b_dual, delta):
    """True when b*(z) = (-1)^deg b(-delta - z)"""
    poly = b_poly.poly
    reflected = poly.compose_affine(-1, -to_fraction(delta))
    if poly.degree % 2:
        reflected = -reflected
    return reflected == b_dual.poly


def discover_delta(b_poly, b_dual):
    """Only possible delta for the reflection: (c + c*) / deg from the z^(deg-1) coefficients"""
    degree = b_poly.degree
    if degree < 1 or degree != b_dual.degree:
        return None
    return (
        b_poly.poly.coefficient(degree - 1) + b_dual.poly.coefficient(degree - 1)
    ) / degree


def verify_pole_reflection(b_poly, b_dual, n):
    """Every predicted pole -n - alpha is the biggest root of b*_E in its class"""
    dual_classes = {
        cls.representative: cls for cls in spectral_classes(b_dual) if not cls.symbolic
    }
    for prediction in predict_poles(b_poly, n):
        if prediction.symbolic:
            continue
        pole = prediction.pole
        cls = dual_classes.get(pole - (pole // 1))
        if cls is None or cls.roots[-1][0] != pole:
            return False
    return True


@dataclass(frozen=True)
class PropDualReport:
    """Isomorphisms twist(E~) -> Hom(F, E_delta) and twist(F) -> Hom(E~, E_delta)"""

    delta: Fraction
    saturation_map: Optional[SeriesMatrix]
    submodule_map: Optional[SeriesMatrix]
    reflection: bool
    precision_caveat: bool = False

    def __bool__(self):
        return (
            self.saturation_map is not None
            and self.submodule_map is not None
            and self.reflection
        )


def verify_prop_dual(module, delta, certificate=None, trunc=None, seed=None):
    """Dualities between the saturation and the biggest simple pole submodule.

    For a delta-self-dual module E the twist of E~ is dual to F and the
    twist of F is dual to E~; the Bernstein polynomials are then related by
    the reflection z -> -delta - z.

    :param AbModule module: the module E
    :param delta: the self-duality shift
    :param DualityCertificate certificate: certificate for E, searched when omitted
    :rtype: PropDualReport
    :raises NotFound: when E itself has no certificate
    """
    delta = to_fraction(delta)
    if certificate is None:
        certificate = find_self_duality(module, delta, trunc, seed)
    elif certificate.delta != delta:
        raise ValueError(f"certificate is for delta={certificate.delta}, not {delta}")

    sat = with_precision_retry(saturate, module, trunc=trunc).module
    sub = with_precision_retry(biggest_simple_pole_sub, module, trunc=trunc).module
    maps, caveat = {}, certificate.precision_caveat
    for key, left, right in (("saturation", sat, sub), ("submodule", sub, sat)):
        # common precision of both intrinsic modules
        size = min(left.trunc, right.trunc)
        dual = hom_ab(right.with_trunc(size), e_delta(delta, size))
        found = search_isomorphism(twist(left.with_trunc(size)), dual, size, seed)
        maps[key] = found.phi
        caveat = caveat or found.precision_caveat
        if not found:
            logger.info(f"no {key} duality found for {module!r} at precision {size}")
    reflection = reflection_check(
        bernstein_of_simple_pole(sat), bernstein_of_simple_pole(sub), delta
    )
    return PropDualReport(
        delta, maps["saturation"], maps["submodule"], reflection, caveat
    )


def verify_simple_pole_hom(first, second):
    """Hom(S1, S2) of two simple pole modules has a simple pole"""
    return is_simple_pole(hom_ab(first, second))
