import json
from importlib import resources

import pytest

from sigma_nuclei.cli import run
from sigma_nuclei.perm import Perm, parse_perm


def fixture_path(name):
    return str(resources.files("sigma_nuclei") / "fixtures" / f"{name}.qg")


@pytest.fixture
def bad_file(tmp_path):
    path = tmp_path / "bad.qg"
    path.write_text("2\n0 1\n0 1\n")
    return str(path)


def test_validate(capsys, bad_file):
    assert run(["validate", fixture_path("z3")]) == 0
    assert "valid quasigroup of order 3" in capsys.readouterr().out
    assert run(["validate", bad_file]) == 2
    assert "repeats" in capsys.readouterr().err
    assert run(["validate", "/nonexistent.qg"]) == 2


def test_usage_errors():
    assert run([]) == 2
    assert run(["nuclei", fixture_path("z3"), "--sigma", "14"]) == 2
    assert run(["isostrophe", fixture_path("z3")]) == 2
    assert run(["isostrophe", fixture_path("z3"), "--alpha", "0,1"]) == 2


def test_nuclei_json_round_trip(capsys):
    assert run(["nuclei", fixture_path("z3"), "--sigma", "e", "--kind", "l", "--json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    (nuc,) = payload["nuclei"]
    assert nuc["size"] == 3 and len(nuc["members"]) == 3
    for m in nuc["members"]:
        perms = [Perm(t) for t in m["triple"]]
        assert perms[1] == Perm.identity(3)
        assert [parse_perm(",".join(map(str, p))) for p in perms] == perms


def test_nuclei_oracle_flag(capsys):
    assert run(["nuclei", fixture_path("q4prime"), "--oracle"]) == 0
    assert capsys.readouterr().out.count("size=4") == 18


def test_parastrophe_and_isostrophe(capsys):
    assert run(["parastrophe", fixture_path("z3"), "--tau", "12"]) == 0
    assert capsys.readouterr().out.split() == "3 0 1 2 1 2 0 2 0 1".split()
    assert run(["isostrophe", fixture_path("z3"), "--alpha", "1,2,0"]) == 0
    assert capsys.readouterr().out.split() == "3 2 0 1 0 1 2 1 2 0".split()


def test_verify_tables(capsys):
    assert run(["verify-tables", fixture_path("z3"), "--table", "3"]) == 0
    assert "36/36 identities hold" in capsys.readouterr().out
    assert run(["verify-tables", fixture_path("q4prime"), "--seed", "7", "--trials", "3"]) == 0
    out = capsys.readouterr().out
    assert "seed 7" in out and "FAIL" not in out
    assert run(["verify-tables", fixture_path("z4"), "--table", "5", "--json", "--tau", "123",
                "--alpha", "1,2,3,0"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["reports"][0]["failed"] == 0


def test_classify(capsys):
    assert run(["classify", fixture_path("z3"), "--json", "--claims"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["classes"]["CI"] and payload["classes"]["WIP"]
    assert "0,2,1" in payload["witnesses"]["CI"]
    assert payload["claims"]["failed"] == 0
    assert run(["classify", fixture_path("z5")]) == 0
    assert "bounded" in capsys.readouterr().out


def test_bench(capsys):
    assert run(["bench", fixture_path("z3"), "--repeat", "1"]) == 0
    out = capsys.readouterr().out
    assert "oracle / fast" in out and "direct / derived" in out
    assert run(["bench", fixture_path("random6_s21"), "--repeat", "1", "--skip-oracle"]) == 0
    out = capsys.readouterr().out
    assert "skipped" in out and "oracle / fast" not in out
