# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..pipeline.commands import (
    cmd_bernstein,
    cmd_check,
    cmd_gen,
    cmd_info,
    cmd_jordan,
    cmd_poles,
    run_command,
)

__all__ = [
    "cmd_info",
    "cmd_bernstein",
    "cmd_poles",
    "cmd_check",
    "cmd_gen",
    "cmd_jordan",
    "run_command",
]
