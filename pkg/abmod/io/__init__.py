# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

from ..io.description import (
    SCHEMA,
    ModuleDescription,
    dump_module,
    load_module,
    parse_description,
    print_description,
)
from ..io.file_reader import DescriptionReader, FileReader
from ..io.file_writer import FileWriter

__all__ = [
    "SCHEMA",
    "ModuleDescription",
    "parse_description",
    "print_description",
    "load_module",
    "dump_module",
    "FileReader",
    "DescriptionReader",
    "FileWriter",
]
