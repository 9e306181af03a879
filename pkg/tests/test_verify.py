import json

import pytest

from excforest import forest
from excforest.cli import main
from excforest.verify import SUITES, run_verify


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass(suite, n):
    report = run_verify(suite, n)
    data = report.to_json()
    assert data["passed"], data["counterexample"]
    assert data["checks"] or n == 1  # no generators at rank 1
    assert all(c["failures"] == 0 for c in data["checks"].values())


@pytest.mark.slow
@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass_rank5(suite):
    data = run_verify(suite, 5).to_json()
    assert data["passed"], data["counterexample"]


def test_report_is_deterministic():
    first = json.dumps(run_verify("clusters", 3).to_json())
    assert first == json.dumps(run_verify("clusters", 3).to_json())


def test_counterexample_is_reported(monkeypatch, capsys):
    monkeypatch.setattr(forest, "delta_forest", lambda f: f)
    report = run_verify("delta", 3).to_json()
    assert not report["passed"]
    assert report["counterexample"]["check"] == "delta_forest_matches_word"
    assert main(["verify", "delta", "3"]) == 1
    capsys.readouterr()


def test_caps():
    with pytest.raises(ValueError, match="--force"):
        run_verify("clusters", 6)
    with pytest.raises(KeyError):
        run_verify("nope", 2)
