import json
import math
from fractions import Fraction

from abmod.core import BernsteinPoly
from abmod.linalg import RationalPolynomial
from abmod.pipeline.report import (
    REPORT_SCHEMA,
    ReportBuilder,
    bernstein_to_dict,
    rational_to_str,
    report_to_text,
    valuation_to_json,
)


def test_rational_helpers():
    assert rational_to_str(Fraction(-4, 3)) == "-4/3"
    assert rational_to_str(None) is None
    assert valuation_to_json(math.inf) is None
    assert valuation_to_json(2) == 2


def test_bernstein_to_dict():
    poly = BernsteinPoly.from_polynomial(
        RationalPolynomial.from_roots([Fraction(-1, 2), Fraction(-1, 2), Fraction(-1)])
    )
    data = bernstein_to_dict(poly)
    assert data["degree"] == 3
    assert data["rational_roots"] == [
        {"root": "-1", "multiplicity": 1},
        {"root": "-1/2", "multiplicity": 2},
    ]
    assert data["polynomial"]["coefficients"][-1] == "1"


def test_report_builder():
    datastore = {
        "results": {"rank": 2, "extra": True},
        "parameters": {"trunc": 18},
        "caveats": ["symbolic", "multiplicity", "symbolic"],
        "input_digest": "0" * 64,
    }
    datastore = ReportBuilder("info").transform(datastore)
    report = datastore["report"]
    assert report["schema"] == REPORT_SCHEMA
    assert report["command"] == "info"
    assert [c["key"] for c in report["caveats"]] == ["multiplicity", "symbolic"]
    assert list(report["descriptions"]) == ["rank"]
    assert "error" not in report
    assert json.loads(datastore["report_text"]) == report
    assert datastore["report_text"] == report_to_text(report)
