# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import hashlib
import json
from dataclasses import dataclass
from typing import Tuple

from ..core.module import AbModule
from ..errors import ParseError
from ..linalg.matrix import SeriesMatrix
from ..series import format_series, parse_series

SCHEMA = "abmod/1"

_REQUIRED = ("schema", "rank", "truncation", "a_matrix")


@dataclass(frozen=True)
class ModuleDescription:
    """Text interchange form of an AbModule.

    a_matrix holds the canonical series text of every entry, row by row.
    """

    rank: int
    truncation: int
    a_matrix: Tuple[Tuple[str, ...], ...]
    name: str = ""
    provenance: str = ""

    @classmethod
    def from_module(cls, module, provenance=""):
        rows = tuple(tuple(format_series(x) for x in row) for row in module.a_matrix.rows)
        return cls(module.rank, module.trunc, rows, module.name, provenance)

    def to_module(self):
        rows = [[parse_series(x, self.truncation) for x in row] for row in self.a_matrix]
        matrix = SeriesMatrix(rows, (self.rank, self.rank), self.truncation)
        return AbModule(matrix, self.name)

    def to_dict(self):
        return {
            "schema": SCHEMA,
            "name": self.name,
            "provenance": self.provenance,
            "rank": self.rank,
            "truncation": self.truncation,
            "a_matrix": [list(row) for row in self.a_matrix],
        }

    def digest(self):
        """SHA-256 of the canonical text"""
        return hashlib.sha256(print_description(self).encode("utf-8")).hexdigest()


def print_description(description):
    """Canonical text: JSON with sorted keys and an indent of 2"""
    return json.dumps(description.to_dict(), sort_keys=True, indent=2) + "\n"


def _location(text, index):
    line = text.count("\n", 0, index) + 1
    column = index - (text.rfind("\n", 0, index) + 1) + 1
    return line, column


def _series_error(text, entry, error):
    # point at the offending entry inside the raw text when it can be found
    index = text.find(json.dumps(entry))
    if index < 0:
        return ParseError(str(error))
    offset = (error.column or 1) if isinstance(error, ParseError) else 1
    line, column = _location(text, index + offset)
    message = str(error).split(" (column")[0]
    return ParseError(message, line=line, column=column)


def parse_description(text):
    """Parse and validate a module description.

    :param str text: JSON text with schema "abmod/1"
    :return: the description
    :rtype: ModuleDescription
    :raises ParseError: with line and column of the problem
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno)
    if not isinstance(data, dict):
        raise ParseError("module description should be a JSON object", line=1, column=1)
    missing = [key for key in _REQUIRED if key not in data]
    if missing:
        raise ParseError(f"missing field(s) {missing}", line=1, column=1)
    if data["schema"] != SCHEMA:
        raise ParseError(f"unsupported schema {data['schema']!r}, expected {SCHEMA!r}", line=1, column=1)

    rank, trunc = data["rank"], data["truncation"]
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise ParseError(f"rank should be a non-negative integer, got {rank!r}", line=1, column=1)
    if not isinstance(trunc, int) or isinstance(trunc, bool) or trunc < 1:
        raise ParseError(f"truncation should be a positive integer, got {trunc!r}", line=1, column=1)
    rows = data["a_matrix"]
    if not isinstance(rows, list) or len(rows) != rank or any(
        not isinstance(row, list) or len(row) != rank for row in rows
    ):
        raise ParseError(f"a_matrix should be a {rank}x{rank} array of strings", line=1, column=1)

    canonical = []
    for row in rows:
        out = []
        for entry in row:
            try:
                out.append(format_series(parse_series(entry, trunc)))
            except ParseError as exc:
                raise _series_error(text, entry, exc)
        canonical.append(tuple(out))
    return ModuleDescription(
        rank=rank,
        truncation=trunc,
        a_matrix=tuple(canonical),
        name=str(data.get("name", "")),
        provenance=str(data.get("provenance", "")),
    )


def load_module(text):
    return parse_description(text).to_module()


def dump_module(module, provenance=""):
    return print_description(ModuleDescription.from_module(module, provenance))
