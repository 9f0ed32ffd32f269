# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

# flake8: noqa
# series, lattices and modules
from .constructors import e_lambda, jordan_module, pham, random_regular
from .core import (
    AbModule,
    bernstein,
    biggest_simple_pole_sub,
    dual_bernstein,
    is_regular,
    is_simple_pole,
    jordan_chain_lift,
    pole_prediction,
    saturate,
)

# duality checks
from .duality import (
    find_self_duality,
    hom_ab,
    morphism_space,
    reflection_check,
    twist,
    verify_bidual,
    verify_prop_dual,
)
from .io import dump_module, load_module
from .series import Series, parse_series
from .version import version as __version__
