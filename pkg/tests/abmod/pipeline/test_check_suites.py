import pytest

from abmod.errors import NotRegular
from abmod.pipeline.check_suites import (
    FAIL,
    INCONCLUSIVE,
    PASS,
    CheckSuiteRunner,
    exit_status,
    random_cases,
    run_check_case,
    summarize,
)


def _case(suite, index, status):
    return {"suite": suite, "case": index, "status": status, "details": {}}


def test_summarize():
    cases = [
        _case("bidual", 0, PASS),
        _case("bidual", 1, PASS),
        _case("twist", 0, FAIL),
        _case("twist", 1, INCONCLUSIVE),
    ]
    assert summarize(cases) == {
        "bidual": {"pass": 2, "fail": 0, "inconclusive": 0},
        "twist": {"pass": 0, "fail": 1, "inconclusive": 1},
    }


def test_exit_status():
    assert exit_status([_case("twist", 0, PASS)]) == 0
    assert exit_status([_case("twist", 0, PASS), _case("twist", 1, INCONCLUSIVE)]) == 2
    assert exit_status([_case("twist", 0, FAIL), _case("twist", 1, INCONCLUSIVE)]) == 1


def test_random_cases():
    cases = random_cases(3, 7, 5)
    assert cases == random_cases(3, 7, 5)
    assert [c["seed"] for c in cases] == [7, 8, 9, 10, 11]
    assert all(1 <= c["rank"] <= 3 for c in cases)


def test_twist_case():
    case = run_check_case("twist", 0, description=pytest.e2_text)
    assert case["status"] == PASS
    assert case["module"] == "E2"
    assert case["details"]["involution"]


def test_bidual_case():
    case = run_check_case("bidual", 0, description=pytest.e2_text, delta=0)
    assert case["status"] == PASS
    assert case["details"] == {"deltas": {"0": True}}


def test_lemma32_case():
    case = run_check_case("lemma32", 3, description=pytest.e2_text)
    assert case["case"] == 3
    assert case["status"] == PASS
    assert case["details"]["pairs"] == 2


def test_propdual_case():
    case = run_check_case("propdual", 0, description=pytest.e2_text)
    assert case["status"] == PASS
    assert case["details"]["delta"] == "0"


def test_reflection_case():
    case = run_check_case("reflection", 0, description=pytest.pham_3_3_text)
    assert case["status"] == PASS
    assert case["details"]["delta"] == "2"


def test_inconclusive_case():
    case = run_check_case("propdual", 0, description=pytest.e1_text, delta=1)
    assert case["status"] == INCONCLUSIVE


def test_domain_error_propagates():
    # only a failed certificate search is inconclusive
    with pytest.raises(NotRegular):
        run_check_case("bidual", 0, description=pytest.not_regular_text)


def test_random_case():
    case = run_check_case("twist", 0, rank=2, seed=3)
    assert case["status"] == PASS


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_check_case("unknown", 0, description=pytest.e2_text)
    with pytest.raises(ValueError):
        CheckSuiteRunner("unknown")


def test_runner_on_random_sweep():
    runner = CheckSuiteRunner("twist", random=(2, 11, 3), n_jobs=1)
    datastore = runner.transform({})
    cases = datastore["results"]["cases"]
    assert [c["case"] for c in cases] == [0, 1, 2]
    assert datastore["results"]["summary"] == {"twist": {"pass": 3, "fail": 0, "inconclusive": 0}}
    assert datastore["exit_code"] == 0
    assert datastore["parameters"]["suites"] == ["twist"]
