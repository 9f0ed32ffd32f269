# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

# flake8: noqa

from .ring import ONE, ZERO, Series, to_fraction
from .text import format_rational, format_series, parse_rational, parse_series

__all__ = [
    "Series",
    "ZERO",
    "ONE",
    "to_fraction",
    "format_series",
    "parse_series",
    "format_rational",
    "parse_rational",
]
