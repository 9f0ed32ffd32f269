# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..core.bernstein import (
    BernsteinPoly,
    PolePrediction,
    SpectralClass,
    bernstein,
    dual_bernstein,
    pole_prediction,
    predict_poles,
    spectral_classes,
)
from ..core.fixed_points import (
    SubModuleResult,
    biggest_simple_pole_sub,
    intrinsic_module,
    is_regular,
    saturate,
    submodule_closure,
)
from ..core.jordan import chain_is_exact, chain_residuals, jordan_chain_lift
from ..core.module import (
    AbModule,
    apply_a,
    direct_sum,
    is_simple_pole,
    residue_endomorphism,
)
from ..core.precision import with_precision_retry

__all__ = [
    "AbModule",
    "apply_a",
    "direct_sum",
    "is_simple_pole",
    "residue_endomorphism",
    "SubModuleResult",
    "saturate",
    "is_regular",
    "biggest_simple_pole_sub",
    "submodule_closure",
    "intrinsic_module",
    "BernsteinPoly",
    "SpectralClass",
    "PolePrediction",
    "bernstein",
    "dual_bernstein",
    "spectral_classes",
    "predict_poles",
    "pole_prediction",
    "jordan_chain_lift",
    "chain_residuals",
    "chain_is_exact",
    "with_precision_retry",
]
