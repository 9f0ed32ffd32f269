# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..duality.checks import (
    DualityCertificate,
    IsomorphismSearch,
    PropDualReport,
    bidual_map,
    discover_delta,
    find_self_duality,
    reflection_check,
    search_isomorphism,
    verify_bidual,
    verify_pole_reflection,
    verify_prop_dual,
    verify_simple_pole_hom,
    verify_twist_hom,
)
from ..duality.hom import e_delta, hom_ab, hom_basis, twist
from ..duality.morphisms import (
    IsomorphismCertificate,
    MorphismSpace,
    a_kernel,
    morphism_residual,
    morphism_space,
    verify_isomorphism,
)

__all__ = [
    "e_delta",
    "twist",
    "hom_ab",
    "hom_basis",
    "a_kernel",
    "MorphismSpace",
    "morphism_space",
    "morphism_residual",
    "IsomorphismCertificate",
    "verify_isomorphism",
    "verify_bidual",
    "bidual_map",
    "verify_twist_hom",
    "verify_simple_pole_hom",
    "DualityCertificate",
    "IsomorphismSearch",
    "search_isomorphism",
    "find_self_duality",
    "PropDualReport",
    "verify_prop_dual",
    "reflection_check",
    "discover_delta",
    "verify_pole_reflection",
]
