import json

import pytest

from abmod import resources
from abmod.pipeline.cli import run


def _report(capsys):
    return json.loads(capsys.readouterr().out)


def test_info(capsys):
    assert run(["info", resources.data("e2.json")]) == 0
    report = _report(capsys)
    assert report["results"]["regular"] is True


def test_bernstein_dual(capsys):
    assert run(["bernstein", resources.data("e2.json"), "--dual", "--trunc", "20"]) == 0
    report = _report(capsys)
    assert report["parameters"]["trunc"] == 20
    assert report["results"]["dual_bernstein"]["polynomial"]["text"] == "z^2 + z - 1"


def test_poles(capsys):
    assert run(["poles", resources.data("pham_3_3.json"), "--n", "2"]) == 0
    assert len(_report(capsys)["results"]["predictions"]) == 3


def test_jordan(capsys):
    args = ["jordan", resources.data("jordan_half_2.json"), "--beta", "1/2", "--d", "2"]
    assert run(args) == 0
    assert _report(capsys)["results"]["residual_zero"]


def test_computation_error(capsys):
    assert run(["bernstein", resources.data("not_regular.json"), "--max-iter", "3"]) == 1
    assert _report(capsys)["error"]["type"] == "NotRegular"


def test_missing_file(capsys, tmp_path):
    assert run(["info", str(tmp_path / "missing.json")]) == 1
    assert "abmod: error" in capsys.readouterr().err


def test_usage_errors():
    for args in (
        [],
        ["info"],
        ["poles", "e2.json"],
        ["check", "--suite", "twist"],
        ["check", "--suite", "unknown", "e2.json"],
        ["gen", "--jordan", "x", "2"],
        ["gen", "--pham", "1,3"],
        ["info", "e2.json", "--trunc", "0"],
    ):
        with pytest.raises(SystemExit) as exc:
            run(args)
        assert exc.value.code == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.startswith("abmod ")


def test_check_exit_codes(capsys):
    assert run(["check", resources.data("e2.json"), "--suite", "bidual", "--delta", "0"]) == 0
    capsys.readouterr()
    # no isomorphism twist(E_1+E_2) -> Hom(E_1+E_2, E_1) exists
    args = ["check", resources.data("e1_e2.json"), "--suite", "reflection", "--delta", "1"]
    assert run(args) == 2
    case = _report(capsys)["results"]["cases"][0]
    assert case["status"] == "inconclusive"


def test_check_error_exit_code(capsys):
    assert run(["check", resources.data("not_regular.json"), "--suite", "bidual"]) == 1
    report = _report(capsys)
    assert report["error"]["type"] == "NotRegular"


def test_gen_to_file(tmp_path):
    path = tmp_path / "e1.json"
    assert run(["gen", "--elambda", "1", "--trunc", "14", "--output", str(path)]) == 0
    assert path.read_text(encoding="utf-8") == pytest.e1_text


def test_gen_to_stdout(capsys):
    assert run(["gen", "--jordan", "1/2", "2", "--trunc", "18"]) == 0
    assert json.loads(capsys.readouterr().out)["name"] == "J(1/2,2)"


def test_report_file_is_byte_identical(tmp_path):
    first, second = tmp_path / "first.json", tmp_path / "second.json"
    for path in (first, second):
        assert run(["poles", resources.data("pham_3_3.json"), "--n", "2", "--output", str(path)]) == 0
    assert first.read_bytes() == second.read_bytes()
