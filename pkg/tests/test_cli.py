import json

import pytest

from excforest.cli import main
from helpers import TARGETS, cli_inputs, conversion_argv, run_cli

RANK9_JSON = '{"n":9,"parent":[3,5,0,5,0,5,4,1,4]}'
RANK9_TEXT = "M(2,3);M(6,6);M(1,3);M(7,9);M(4,9);M(4,4);M(7,7);M(2,2);M(8,8)"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_convert_parking(capsys):
    assert run(capsys, "convert", "--from", "parking", "--to", "ces", "1,1,2,2")[:2] == (
        0, "M(1,4);M(1,1);M(2,3);M(2,2)\n")


def test_convert_forest(capsys):
    assert run(capsys, "convert", "--from", "forest", "--to", "ces", RANK9_JSON)[1] == RANK9_TEXT + "\n"
    assert run(capsys, "convert", "--from", "ces", "--to", "forest", RANK9_TEXT)[1] == RANK9_JSON + "\n"


def test_convert_identity(capsys):
    assert run(capsys, "convert", "--from", "ces", "--to", "ces", RANK9_TEXT)[1] == RANK9_TEXT + "\n"


def test_convert_json_output(capsys):
    _, out, _ = run(capsys, "convert", "--from", "parking", "--to", "ces", "--json", "2,1")
    assert json.loads(out) == {"n": 2, "objects": [{"a": 2, "b": 2}, {"a": 1, "b": 2}]}


def test_convert_prufer_routes(capsys):
    base = ("convert", "--from", "prufer", "--to", "parking")
    assert run(capsys, *base, "3,2,1")[1] == "1,1,1,1\n"
    assert run(capsys, *base, "--prufer-route", "parking", "3,2,1")[1] == "1,4,1,2\n"


def test_convert_factorization(capsys):
    _, out, _ = run(capsys, "convert", "--from", "forest", "--to", "factorization", RANK9_JSON)
    assert out == "2-4 6-7 1-4 7-0 4-0 4-5 7-8 2-3 8-9\n"


def test_convert_dot(capsys):
    code, out, _ = run(capsys, "convert", "--from", "forest", "--to", "dot", "2,0")
    assert code == 0 and out.startswith("digraph forest {")
    assert run(capsys, "convert", "--from", "ces", "--to", "dot", "S(1)")[0] == 2


def test_convert_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1,1,2,2\n"))
    assert run(capsys, "convert", "--from", "parking", "--to", "forest")[1] == '{"n":4,"parent":[0,1,1,3]}\n'


def test_validation_errors(capsys):
    code, _, err = run(capsys, "convert", "--from", "parking", "--to", "ces", "1,3,3,3")
    assert code == 1 and "not a parking function" in err
    code, _, err = run(capsys, "convert", "--from", "ces", "--to", "ces", "S(2);S(1)")
    assert code == 1
    code, _, err = run(capsys, "convert", "--from", "ces", "--to", "ces", "M(1,2;S(1)")
    assert code == 1 and "object 1" in err
    code, _, err = run(capsys, "convert", "--from", "forest", "--to", "ces", '{"n":2,"parent":[2,')
    assert code == 1 and "position" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nosuch", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    assert run(capsys, "verify", "genfun", "9")[0] == 2
    assert run(capsys, "enumerate", "ces", "8")[0] == 2


def test_act(capsys):
    _, out, _ = run(capsys, "act", "--rep", "ces", "--word", "1 2 3", "M(1,4);M(1,3);M(1,2);M(1,1)")
    assert out == "M(2,2);M(1,4);M(1,3);M(1,2)\n"
    _, out, _ = run(capsys, "act", "--rep", "forest", "--named", "Delta", "2,3,0,1,1,7,3")
    assert out == '{"n":7,"parent":[5,1,4,7,0,0,0]}\n'
    _, out, _ = run(capsys, "act", "--rep", "ces", "M(1,2);S(1)")
    assert out == "M(1,2);M(1,1)\n"
    _, out, _ = run(capsys, "act", "--rep", "ces", "--named", "D", "--named", "D", "M(1,2);S(1)")
    assert out == "M(1,2);M(1,1)\n"
    code, _, err = run(capsys, "act", "--rep", "forest", "--word", "4", "0,0,0")
    assert code == 1 and "n-1=2" in err


@pytest.mark.parametrize("name", ["delta", "Delta", "Delta-inv", "D", "C", "full-twist"])
def test_act_named_representations_agree(capsys, name):
    text = "M(2,3);M(6,6);M(1,3);M(7,9);M(4,9);M(4,4);M(7,7);M(2,2);M(8,8)"
    _, ces_out, _ = run(capsys, "act", "--rep", "ces", "--named", name, text)
    _, forest_out, _ = run(capsys, "act", "--rep", "forest", "--named", name, RANK9_JSON)
    _, converted, _ = run(capsys, "convert", "--from", "ces", "--to", "forest", ces_out.strip())
    assert converted == forest_out


def test_enumerate(capsys):
    _, out, _ = run(capsys, "enumerate", "forests", "3")
    assert len(out.splitlines()) == 16
    _, out, _ = run(capsys, "enumerate", "clusters", "3")
    assert len(out.splitlines()) == 14
    _, out, _ = run(capsys, "enumerate", "parking", "3", "--limit", "2")
    assert out == "1,1,1\n1,1,2\n"
    _, out, _ = run(capsys, "enumerate", "ces", "2", "--json")
    assert [len(json.loads(line)["objects"]) for line in out.splitlines()] == [2, 2, 2]


def test_stats(capsys):
    assert run(capsys, "stats", "4", "--eval", "2,1,2")[1] == "1008\n"
    assert run(capsys, "stats", "2", "--json")[1] == "[[0,0,2,1],[0,1,1,1],[1,0,1,1]]\n"
    assert run(capsys, "stats", "3", "--source", "sequences")[1] == run(capsys, "stats", "3")[1]
    assert run(capsys, "stats", "3", "--eval", "1,2")[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "genfun", "4")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["objects"] == 125
    code, out, _ = run(capsys, "verify", "equivariance", "3", "--compact")
    report = json.loads(out)
    assert report["objects"] == 16 and report["checks"]["sigma_equivariant"]["cases"] == 32
    code, out, _ = run(capsys, "verify", "braid-relations", "2")
    report = json.loads(out)
    assert code == 0 and report["objects"] == 3
    assert "commute_forest" not in report["checks"] and "braid_forest" not in report["checks"]


def test_factorize(capsys):
    _, out, _ = run(capsys, "factorize", "--json", "S(1);S(2);S(3)")
    assert json.loads(out) == {"n": 3, "factors": [[1, 2], [2, 3], [3, 0]],
                               "composite": [1, 2, 3, 0], "is_long_cycle": True}
    _, out, _ = run(capsys, "factorize", "--from", "forest", RANK9_JSON)
    assert out == "2-4 6-7 1-4 7-0 4-0 4-5 7-8 2-3 8-9\n"


def test_round_trips_through_every_format(capsys):
    for item in cli_inputs():
        _, ces, _ = run(capsys, *conversion_argv(item, "ces"))
        for target in TARGETS:
            _, out, _ = run(capsys, *conversion_argv(item, target))
            back = {"from": target, "payload": out.strip()}
            if "route" in item:
                back["route"] = item["route"]
            assert run(capsys, *conversion_argv(back, "ces"))[1] == ces, (item, target)


def test_subprocess_entry_point():
    proc = run_cli(["convert", "--from", "parking", "--to", "ces", "-"], stdin="1,1,2,2")
    assert proc.returncode == 0 and proc.stdout == "M(1,4);M(1,1);M(2,3);M(2,2)\n"
