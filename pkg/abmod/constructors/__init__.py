# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..constructors.factories import (
    PhamSpec,
    e_lambda,
    jordan_module,
    pham,
    random_regular,
)
from ..core.fixed_points import submodule_closure
from ..core.module import direct_sum

__all__ = [
    "e_lambda",
    "jordan_module",
    "PhamSpec",
    "pham",
    "random_regular",
    "submodule_closure",
    "direct_sum",
]
