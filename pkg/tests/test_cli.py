from __future__ import annotations

import json
import subprocess
import sys

import pytest

from beauville import certificate
from beauville.cli import main


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_d2_both_methods(capsys):
    code, out, _ = run(["d2", "--n", "5"], capsys)
    assert code == 0 and json.loads(out)["d2"] == 19
    code, out, _ = run(["d2", "--n", "5", "--method", "moebius"], capsys)
    assert code == 0 and json.loads(out)["d2"] == 19


def test_d2_beyond_cap_is_infeasible(capsys):
    assert run(["d2", "--n", "9"], capsys)[0] == 3


def test_usage_errors(capsys):
    assert run([], capsys)[0] == 2
    assert run(["construct", "--n", "5"], capsys)[0] == 2
    assert run(["d2", "--n", "five"], capsys)[0] == 2


def test_construct_no_structure(capsys):
    code, out, _ = run(["construct", "--n", "5", "--k", "1"], capsys)
    assert code == 1
    report = json.loads(out)["no_structure"]["obstruction"]
    assert report == {"classes": 19, "pair_checks": 361, "passing": 0}


def test_construct_infeasible_and_unsupported(capsys):
    assert run(["construct", "--n", "5", "--k", "20"], capsys)[0] == 3
    assert run(["construct", "--n", "7", "--k", "1"], capsys)[0] == 3
    assert run(["construct", "--n", "7", "--k", "30", "--cap", "10"], capsys)[0] == 3


def test_cap_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("BVL_CAP", "4")
    assert run(["construct", "--n", "7", "--k", "5"], capsys)[0] == 3
    assert run(["construct", "--n", "7", "--k", "4"], capsys)[0] == 0
    monkeypatch.setenv("BVL_CAP", "many")
    assert run(["construct", "--n", "7", "--k", "4"], capsys)[0] == 2


def test_round_trip(tmp_path, capsys):
    path = tmp_path / "a7.json"
    assert run(["construct", "--n", "7", "--k", "12", "--out", str(path)], capsys)[0] == 0
    data = path.read_bytes()
    assert data.endswith(b"\n") and data.count(b"\n") == 1
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 0 and json.loads(out)["ok"] == 1


def test_stdout_matches_file(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(["construct", "--n", "6", "--k", "3", "--out", str(path)], capsys)
    code, out, _ = run(["construct", "--n", "6", "--k", "3"], capsys)
    assert code == 0 and out.encode() == path.read_bytes()


def test_tampering_is_rejected(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(["construct", "--n", "6", "--k", "3", "--out", str(path)], capsys)
    doc = json.loads(path.read_bytes())

    swapped = json.loads(json.dumps(doc))
    side = swapped["triples"][1]
    side["a"][0], side["a"][1] = side["a"][1], side["a"][0]
    path.write_bytes(certificate.canonical_bytes(swapped))
    assert run(["verify", str(path)], capsys)[0] == 1

    resealed = json.loads(json.dumps(doc))
    resealed["claimed_types"][0][0] += 1
    body = {k: v for k, v in resealed.items() if k != "digest"}
    resealed["digest"] = certificate._digest(body)
    path.write_bytes(certificate.canonical_bytes(resealed))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1 and "claimed-types" in json.loads(out)["failed"]

    broken = json.loads(json.dumps(doc))
    broken["triples"][0]["b"][0][0] = broken["triples"][0]["b"][0][1]
    path.write_bytes(certificate.canonical_bytes(broken))
    code, out, _ = run(["verify", str(path)], capsys)
    assert code == 1 and "permutations" in json.loads(out)["failed"]


def test_malformed_certificates(tmp_path, capsys):
    path = tmp_path / "c.json"
    run(["construct", "--n", "6", "--k", "2", "--out", str(path)], capsys)
    data = path.read_bytes()
    path.write_bytes(data[: len(data) // 2])
    assert run(["verify", str(path)], capsys)[0] == 2
    doc = json.loads(data)
    doc["group"]["k"] = 3
    path.write_bytes(certificate.canonical_bytes(doc))
    assert run(["verify", str(path)], capsys)[0] == 2
    assert run(["verify", str(tmp_path / "missing.json")], capsys)[0] == 2


def test_catalog_listing(capsys):
    code, out, _ = run(["catalog", "--n", "7", "--verify"], capsys)
    assert code == 0 and all(json.loads(line)["proof"] for line in out.splitlines())
    code, out, err = run(["catalog", "--n", "6", "--verify"], capsys)
    assert code == 1 and "A6-445" in err
    assert run(["catalog", "--n", "6"], capsys)[0] == 0
    assert run(["catalog", "--n", "12"], capsys)[0] == 3


def test_classreps(capsys):
    code, out, _ = run(["classreps", "--n", "5"], capsys)
    assert code == 0 and len(out.splitlines()) == 19
    assert run(["classreps", "--n", "8"], capsys)[0] == 3


def test_no_beauville(capsys):
    code, out, _ = run(["no-beauville"], capsys)
    assert code == 0 and json.loads(out)["passing"] == 0
    assert run(["no-beauville", "--n", "6"], capsys)[0] == 3


@pytest.mark.parametrize("argv,code", [(["d2", "--n", "5"], 0), (["construct", "--n", "5", "--k", "1"], 1)])
def test_module_entry_point(argv, code):
    proc = subprocess.run([sys.executable, "-m", "beauville", *argv], capture_output=True)
    assert proc.returncode == code
