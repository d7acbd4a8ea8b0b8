import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]
DATA = ROOT / "data"
CLI = os.environ.get("TDESC_CLI", str(ROOT / "build" / "tdesc"))

FANS = sorted(p.stem for p in (DATA / "fans").glob("*.json"))
LATTICES = sorted(p.stem for p in (DATA / "lattices").glob("*.json"))
SMOOTH_PROJECTIVE = [f for f in FANS if f != "twisted_prism"]


def schema(name):
    return json.loads((DATA / "schemas" / f"{name}.schema.json").read_text())


def run(*args, expect=0):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True, timeout=120)
    assert proc.returncode == expect, proc.stderr
    return proc


def run_json(*args):
    return json.loads(run("--json", *args).stdout)


@pytest.mark.parametrize("kind,name", [("fans", "fan"), ("lattices", "glattice"), ("models", "model")])
def test_bundled_inputs_match_schemas(kind, name):
    s = schema(name)
    files = sorted((DATA / kind).glob("*.json"))
    assert files
    for f in files:
        jsonschema.validate(json.loads(f.read_text()), s)


def test_schemas_are_valid():
    for f in (DATA / "schemas").glob("*.json"):
        jsonschema.Draft202012Validator.check_schema(json.loads(f.read_text()))


@pytest.mark.parametrize("fan", FANS)
def test_analyze(fan):
    report = run_json("analyze", fan)
    jsonschema.validate(report, schema("analysis"))


@pytest.mark.parametrize("fan", SMOOTH_PROJECTIVE)
def test_forms_real(fan):
    report = run_json("forms", fan, "--field", "real")
    jsonschema.validate(report, schema("forms"))


@pytest.mark.parametrize("field", ["finite:1", "finite:2", "finite:3"])
def test_forms_finite(field):
    jsonschema.validate(run_json("forms", "dp6", "--field", field), schema("forms"))


def test_forms_abstract():
    report = run_json("forms", "p1xp1", "--field", str(DATA / "models" / "real-abstract.json"))
    jsonschema.validate(report, schema("forms"))
    assert [c["size"] for c in report["neutralization_classes"]] == [3, 1]
    run("forms", "dp6", "--field", str(DATA / "models" / "real-abstract.json"), expect=2)


@pytest.mark.parametrize("lattice", LATTICES)
@pytest.mark.parametrize("sub", ["cohomology", "flasque", "coflasque", "resolve", "invertible", "kernel"])
def test_lattice(lattice, sub):
    jsonschema.validate(run_json("lattice", sub, lattice), schema(f"lattice-{sub}"))


def test_lattice_examples():
    c = run_json("lattice", "cohomology", "sign-c2", "--degree", "-1")
    assert c["cohomology"][0]["group"]["invariant_factors"] == [2]
    assert run_json("lattice", "invertible", "sign-c2")["invertible"]["verdict"] == "Disproven"
    assert run_json("lattice", "flasque", "dp6-pic")["flasque"]["holds"] is True


@pytest.mark.parametrize("fan", SMOOTH_PROJECTIVE)
def test_omega_and_nef(fan):
    jsonschema.validate(run_json("omega", fan), schema("omega"))
    jsonschema.validate(run_json("nef", fan), schema("nef"))


def test_omega_user_set(tmp_path):
    blunk = tmp_path / "blunk.json"
    blunk.write_text(json.dumps({"classes": [[1, 0, 0, 0], [2, -1, -1, -1], [1, -1, 0, 0], [1, 0, -1, 0], [1, 0, 0, -1]]}))
    jsonschema.validate(json.loads(blunk.read_text()), schema("omega-set"))
    report = run_json("omega", "dp6", "--set", str(blunk))
    jsonschema.validate(report, schema("omega"))
    assert report["validation"]["ok"]
    assert report["target"]["text"] == "(P^2)^2 x (P^1)^3"


def test_h0():
    report = run_json("h0", "p2", "--divisor", "1,0,0")
    jsonschema.validate(report, schema("h0"))
    assert report["h0"] == 3


def test_examples():
    listing = run_json("examples", "list")
    jsonschema.validate(listing, schema("examples"))
    assert "fans/dp6.json" in listing["examples"]
    emitted = json.loads(run("examples", "emit", "dp6").stdout)
    assert emitted == json.loads((DATA / "fans" / "dp6.json").read_text())


def test_exit_codes(tmp_path):
    run("analyze", str(tmp_path / "missing.json"), expect=1)
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    run("analyze", str(bad), expect=1)
    nonprimitive = tmp_path / "nonprimitive.json"
    nonprimitive.write_text(json.dumps({"rank": 2, "rays": [[2, 0], [0, 1]], "max_cones": [[0, 1]]}))
    run("analyze", str(nonprimitive), expect=2)
    run("forms", "twisted_prism", expect=2)
    run("h0", "p2", "--divisor", "1,x,0", expect=1)


def test_text_output():
    text = run("forms", "p1xp1", "--field", "real").stdout
    assert "variety classes: 4" in text
    assert "N-classes: 7" in text


@pytest.mark.parametrize("fan", FANS)
def test_deterministic(fan):
    for args in (["analyze", fan], ["--json", "analyze", fan]):
        assert run(*args).stdout == run(*args).stdout
    if fan in SMOOTH_PROJECTIVE:
        args = ["--json", "forms", fan]
        assert run(*args).stdout == run(*args).stdout
