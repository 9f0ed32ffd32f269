# Copyright (c) 2020 abmod developers
# This file is part of abmod, exact computations with regular (a,b)-modules
# Licensed under the MIT License

import datetime
import json
import math

from ..base import Module
from ..config import caveats as caveat_texts
from ..config import get_field_description
from ..series import format_rational, format_series
from ..version import version

REPORT_SCHEMA = "abmod-report/1"


def rational_to_str(value):
    return None if value is None else format_rational(value)


def polynomial_to_dict(poly):
    return {
        "text": str(poly),
        "coefficients": [format_rational(c) for c in poly.coeffs],
    }


def bernstein_to_dict(poly):
    return {
        "polynomial": polynomial_to_dict(poly.poly),
        "degree": poly.degree,
        "factorization": [
            {"factor": polynomial_to_dict(q), "multiplicity": m} for q, m in poly.factorization
        ],
        "rational_roots": [
            {"root": format_rational(r), "multiplicity": m} for r, m in poly.rational_roots
        ],
    }


def vector_to_list(vector):
    return [format_series(x) for x in vector]


def matrix_to_list(matrix):
    return [[format_series(x) for x in row] for row in matrix.rows]


def lattice_to_dict(lattice):
    return {
        "shift": lattice.shift,
        "precision": lattice.precision,
        "pivots": [[row, val] for row, val in lattice.pivots],
        "generators": matrix_to_list(lattice.generators),
    }


def prediction_to_dict(prediction):
    return {
        "class": rational_to_str(prediction.representative),
        "alpha": rational_to_str(prediction.alpha),
        "multiplicity": prediction.multiplicity,
        "pole": rational_to_str(prediction.pole),
        "order_lower_bound": prediction.order_lower_bound,
        "roots_above": prediction.roots_above,
        "forced_root": prediction.forced_root,
        "consistent": prediction.consistent,
        "symbolic": prediction.symbolic,
        "symbolic_factors": list(prediction.symbolic_factors),
    }


def valuation_to_json(valuation):
    return None if valuation == math.inf else valuation


def report_to_text(report):
    """Canonical report text: JSON with sorted keys and an indent of 2"""
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


class ReportBuilder(Module):
    """Assembles the structured report of a command from the datastore.

    The report holds the command name, the input digest, the effective
    parameters, the results with a description of their fields and the
    caveats. Its text form is canonical so that identical runs give
    byte-identical output.
    """

    def __init__(
        self,
        command,
        results_key="results",
        parameters_key="parameters",
        caveats_key="caveats",
        digest_key="input_digest",
        store_key="report",
        text_key="report_text",
        timestamp=False,
    ):
        super().__init__()
        self.command = command
        self.results_key = results_key
        self.parameters_key = parameters_key
        self.caveats_key = caveats_key
        self.digest_key = digest_key
        self.store_key = store_key
        self.text_key = text_key
        self.timestamp = timestamp

    def transform(self, datastore):
        caveats = sorted(set(datastore.get(self.caveats_key, [])))
        results = datastore.get(self.results_key, {})
        report = {
            "schema": REPORT_SCHEMA,
            "version": version,
            "command": self.command,
            "input_digest": datastore.get(self.digest_key),
            "parameters": datastore.get(self.parameters_key, {}),
            "results": results,
            "descriptions": {
                key: get_field_description(key)
                for key in sorted(results)
                if get_field_description(key)
            },
            "caveats": [{"key": c, "text": caveat_texts.get(c, c)} for c in caveats],
        }
        if "error" in datastore:
            report["error"] = datastore["error"]
        if self.timestamp:
            report["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
        datastore[self.store_key] = report
        datastore[self.text_key] = report_to_text(report)
        self.logger.debug(f'Report for command "{self.command}" assembled.')
        return datastore
