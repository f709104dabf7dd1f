import json

import pytest

from ncshuffle import serialize
from ncshuffle.cli import main
from ncshuffle.shuffle import sequence


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def moments(tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps({"moments": ["1", "2", "5", "14"]}))
    return str(path)


@pytest.fixture
def pair(tmp_path):
    path = tmp_path / "p.json"
    path.write_text(json.dumps({"phi": {"moments": ["1", "2", "3"]}, "psi": {"moments": ["0", "1", "0"]}}))
    return str(path)


def test_enumerate_count(capsys):
    assert run(capsys, "enumerate", "--family", "nc", "--n", "4", "--count-only")[1].strip() == "14"


def test_enumerate_list(capsys):
    code, out, _ = run(capsys, "enumerate", "--family", "nc_irr", "--n", "3")
    assert code == 0 and len(json.loads(out)) == 2


def test_transform_boolean(capsys, moments):
    code, out, _ = run(capsys, "transform", moments, "--to", "boolean")
    fam = serialize.loads(out)
    assert code == 0 and sequence(fam.values)[:2] == [1, 1]


def test_transform_round_trip(capsys, moments, tmp_path):
    target = tmp_path / "t.json"
    assert main(["-o", str(target), "transform", moments, "--to", "t-boolean", "--t", "1/2"]) == 0
    code, out, _ = run(capsys, "transform", str(target), "--from", "t-boolean", "--to", "moments")
    assert code == 0 and sequence(serialize.loads(out)) == [1, 2, 5, 14]


def test_transform_needs_t(capsys, moments):
    code, _, err = run(capsys, "transform", moments, "--to", "t-monotone")
    assert code == 1 and json.loads(err)["error"] == "schema"


def test_truncation_override_and_cap(capsys, moments, monkeypatch):
    code, out, _ = run(capsys, "transform", moments, "--to", "free", "--truncation", "2")
    assert code == 0 and serialize.loads(out).truncation == 2
    monkeypatch.setenv("NCSHUFFLE_MAX_DEGREE", "3")
    code, _, err = run(capsys, "transform", moments, "--to", "free")
    assert code == 1 and json.loads(err)["error"] == "truncation"


def test_ctransform_and_cconvolve(capsys, pair):
    code, out, _ = run(capsys, "ctransform", pair, "--to", "c-monotone")
    assert code == 0 and serialize.loads(out).kind == "cmonotone"
    code, out, _ = run(capsys, "cconvolve", pair, pair, "--kind", "c-free")
    assert code == 0 and serialize.loads(out).phi.truncation == 3
    code, out, _ = run(capsys, "cconvolve", pair, "--kind", "c-monotone", "--power", "2")
    assert code == 0


def test_convolve_kinds(capsys, moments):
    for kind in ("free", "boolean", "monotone", "orthogonal", "subordination"):
        assert run(capsys, "convolve", moments, moments, "--kind", kind)[0] == 0
    assert run(capsys, "convolve", moments, "--kind", "belinschi-nica", "--t", "1")[0] == 0
    assert run(capsys, "convolve", moments, "--kind", "belinschi-nica")[0] == 1


def test_mismatch_is_reported(capsys, moments, pair, tmp_path):
    short = tmp_path / "s.json"
    short.write_text(json.dumps({"moments": ["1"]}))
    code, _, err = run(capsys, "convolve", moments, str(short), "--kind", "free")
    assert code == 1 and json.loads(err)["error"] == "mismatch"
    code, _, err = run(capsys, "convolve", pair, moments, "--kind", "free")
    assert code == 1 and json.loads(err)["error"] == "schema"


def test_coefficients(capsys):
    code, out, _ = run(capsys, "coefficients", "--n", "4", "--table", "omega")
    rows = json.loads(out)
    assert code == 0 and sorted(r["omega"] for r in rows) == ["-1/2", "-1/2", "-1/2", "1/1", "1/6"]
    assert run(capsys, "coefficients", "--n", "9")[0] == 1
    code, out, _ = run(capsys, "coefficients", "--table", "ts-expansion")
    assert code == 0 and json.loads(out)["orders"]["4"]["engine_diagonal_ok"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "shuffle-axioms", "--degree", "5", "--seed", "7")
    assert code == 0 and out.count("PASS") == 4
    code2, out2, _ = run(capsys, "verify", "--suite", "shuffle-axioms", "--degree", "5", "--seed", "7")
    assert out2 == out


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nonexistent")
    assert code == 1 and json.loads(err)["error"] == "unknown-suite"


def test_bad_usage(capsys):
    assert main(["frobnicate"]) == 1
    assert main(["transform", "x.json", "--to", "boolean", "--t", "0.5"]) == 1
