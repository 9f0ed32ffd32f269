# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..base.module import Module
from ..base.pipeline import Pipeline

__all__ = ["Module", "Pipeline"]
