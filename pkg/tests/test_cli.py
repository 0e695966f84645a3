import json

import pytest

from genexp import cli
from genexp.poly import Poly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_genexp_c_json(capsys):
    code, out, _ = run(capsys, "genexp", "c", "--lambda", "1,1", "--rank", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["result"] == {"poly": {"2": 1, "4": 1}}
    assert doc["conventions"]["reading"] == "japanese-column"
    assert "sundaram-row-bound" in doc["conventions"]
    assert doc["query"]["lambda"] == [1, 1]


def test_stable_and_extremal(capsys):
    _, out, _ = run(capsys, "genexp", "stable-c", "--lambda", "1,1", "--cutoff", "8")
    assert json.loads(out)["result"]["poly"] == {"2": 1, "4": 1, "6": 1, "8": 1}
    _, out, _ = run(capsys, "extremal", "min", "--lambda", "7,6,5,3,1", "--rank", "5", "--format", "text")
    assert out.strip() == "13"
    _, out, _ = run(capsys, "extremal", "sigma", "--lambda", "1,1", "--rank", "2")
    assert json.loads(out)["result"]["report"]["tableau"] == "3/4"


def test_oracle_branch_compare(capsys):
    _, out, _ = run(capsys, "oracle", "c", "--lambda", "2", "--rank", "3", "--format", "text")
    assert out.strip() == "t + t^3 + t^5"
    _, out, _ = run(capsys, "branch", "--lambda", "2,1,1", "--nu", "5,4,3,3,3,2", "--rank", "3", "--witnesses")
    doc = json.loads(out)
    assert doc["result"] == {"count": 1}
    assert {w["rule"] for w in doc["witnesses"]} == {"sundaram", "kwon", "kwon_via_C3"}
    _, out, _ = run(capsys, "compare", "--lambda", "2,1,1", "--nu", "5,4,3,3,3,2", "--rank", "3")
    assert json.loads(out)["result"]["report"]["bijective"] is True


def test_witnesses_and_multi(capsys):
    _, out, _ = run(capsys, "genexp", "c", "--lambda", "1,1", "--rank", "3", "--witnesses")
    doc = json.loads(out)
    assert sorted(w["charge"] for w in doc["witnesses"]) == [2, 4]
    _, out, _ = run(capsys, "genexp", "c", "--lambda", "1,1", "--rank", "3", "--multi")
    assert cli.poly_from_payload(json.loads(out)["result"]["poly"]) == Poly.parse("t_2 + t_4")
    _, out, _ = run(capsys, "genexp", "a", "--lambda", "2,1", "--rank", "3", "--format", "csv")
    assert out.splitlines() == ["degree,coefficient", "1,1", "2,1"]


@pytest.mark.parametrize("argv,code", [
    (["genexp", "c", "--lambda", "1,x", "--rank", "3"], cli.EXIT_MALFORMED),
    (["genexp", "c", "--rank", "3"], cli.EXIT_MALFORMED),
    (["genexp", "c", "--lambda", "1,1,1,1", "--rank", "3"], cli.EXIT_RANK),
    (["genexp", "a", "--lambda", "1,1,1", "--rank", "3"], cli.EXIT_RANK),
    (["extremal", "min", "--lambda", "2,1", "--rank", "2"], cli.EXIT_RANK),
    (["genexp", "stable-c", "--lambda", "1,1"], cli.EXIT_CUTOFF),
    (["genexp", "stable-c", "--lambda", "1,1", "--cutoff", "-2"], cli.EXIT_CUTOFF),
    (["genexp", "c", "--lambda", "1,1", "--rank", "2", "--cutoff", "4"], cli.EXIT_CUTOFF),
])
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == "" and len(err.strip().splitlines()) == 1


def test_verify_report(capsys):
    code, out, _ = run(capsys, "verify", "theorem-ac")
    rep = json.loads(out)["result"]["report"]
    assert code == 0 and rep["passed"] and rep["cases"] == 15


def test_cache_is_byte_identical(capsys, tmp_path, monkeypatch):
    argv = ["genexp", "c", "--lambda", "2,2", "--rank", "3"]
    _, fresh, _ = run(capsys, *argv)
    monkeypatch.setenv("GENEXP_CACHE", str(tmp_path))
    _, first, _ = run(capsys, *argv)
    files = list(tmp_path.rglob("*.json"))
    assert len(files) == 1 and not list(tmp_path.rglob("*.tmp"))
    _, second, _ = run(capsys, *argv)
    assert fresh == first == second == files[0].read_text()
    # a poisoned cache entry is what gets served, proving the hit path is used
    files[0].write_text(first.replace('"2": 1', '"2": 7'))
    _, third, _ = run(capsys, *argv)
    assert third != first
    _, fourth, _ = run(capsys, *argv, "--refresh")
    assert fourth == first


def test_jobspec_key_ignores_format():
    a = cli.spec_from_args(cli.build_parser().parse_args(["genexp", "c", "--lambda", "1,1", "--rank", "3"]))
    b = cli.spec_from_args(cli.build_parser().parse_args(["genexp", "c", "--lambda", "1,1", "--rank", "3", "--format", "csv"]))
    c = cli.spec_from_args(cli.build_parser().parse_args(["genexp", "c", "--lambda", "1,1", "--rank", "4"]))
    assert a.key() == b.key() != c.key()


@pytest.mark.parametrize("argv", [
    ["genexp", "c", "--lambda", "2,2", "--rank", "3"],
    ["genexp", "stable-b", "--lambda", "2", "--cutoff", "6"],
    ["oracle", "a", "--lambda", "2,1", "--rank", "3"],
])
def test_poly_round_trip_through_text(capsys, argv):
    _, out, _ = run(capsys, *argv)
    p = cli.poly_from_payload(json.loads(out)["result"]["poly"])
    _, text, _ = run(capsys, *argv, "--format", "text")
    assert Poly.parse(text.split(" + O(")[0]) == p
