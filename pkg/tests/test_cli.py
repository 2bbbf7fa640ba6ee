import json

from ringlab.cli import main

T2Z2 = {"triangular": {"n": 2, "base": {"zn": 2}}}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_t2z2(spec_file, capsys):
    path = spec_file(T2Z2)
    code, out, _ = run(capsys, "classify", "--spec", path, "--json")
    assert code == 0
    doc = json.loads(out)
    cls = doc["classification"]
    assert cls["is_CUSC"] is True
    assert cls["is_CUC"] is False
    assert cls["is_USC"] is True


def test_classify_z3_witness(spec_file, capsys):
    path = spec_file({"zn": 3})
    code, out, _ = run(capsys, "classify", "--spec", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["classification"]["is_CUSC"] is False
    assert doc["classification"]["witnesses"]["is_CUSC"]["element"] == "2"


def test_classify_bad_spec_exits_2(spec_file, capsys):
    path = spec_file({"bogus": 1})
    code, out, err = run(capsys, "classify", "--spec", path)
    assert code == 2
    assert "error" in err


def test_classify_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "classify", "--spec", str(tmp_path / "nope.json"))
    assert code == 2


def test_classify_elements_flag(spec_file, capsys):
    path = spec_file({"zn": 3})
    code, out, _ = run(capsys, "classify", "--spec", path, "--json", "--elements")
    doc = json.loads(out)
    assert len(doc["elements"]) == 3


def test_element_z3(spec_file, capsys):
    path = spec_file({"zn": 3})
    code, out, _ = run(capsys, "element", "--spec", path, "--element", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["profile"]["clean_decompositions"]) == 2


def test_element_z4(spec_file, capsys):
    path = spec_file({"zn": 4})
    code, out, _ = run(capsys, "element", "--spec", path, "--element", "3", "--json")
    doc = json.loads(out)
    decomps = doc["profile"]["clean_decompositions"]
    assert decomps == [{"idempotent": "0", "unit": "3", "commuting": True}]


def test_element_matrix_label(spec_file, capsys):
    path = spec_file(T2Z2)
    code, out, _ = run(capsys, "element", "--spec", path, "--element", "(1 1;0 0)", "--json")
    assert code == 0
    doc = json.loads(out)
    strong = doc["profile"]["strongly_clean_decompositions"]
    assert len(strong) == 1
    assert doc["profile"]["is_uniquely_strongly_clean"] is True
    assert doc["profile"]["is_uniquely_clean"] is False


def test_element_unresolvable_exits_2(spec_file, capsys):
    path = spec_file({"zn": 4})
    code, _, err = run(capsys, "element", "--spec", path, "--element", "(1 1)")
    assert code == 2
    assert "resolve" in err


def test_build_command(spec_file, capsys):
    path = spec_file({"gf": {"p": 2, "k": 2}})
    code, out, _ = run(capsys, "build", "--spec", path, "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 4
    assert doc["validation"]["ok"] is True


def test_catalog_command_with_manifest(capsys, tmp_path):
    manifest = [
        {"name": "Z2", "spec": {"zn": 2}},
        {"name": "Z6", "spec": {"zn": 6}},
    ]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(manifest))
    code, out, _ = run(capsys, "catalog", "--catalog", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert [r["name"] for r in doc["rings"]] == ["Z2", "Z6"]
    assert doc["rings"][1]["units"] == 2


def test_verify_single_theorem(capsys, tmp_path):
    manifest = [
        {"name": "Z2", "spec": {"zn": 2}},
        {"name": "Z4", "spec": {"zn": 4}},
        {"name": "T2(Z2)", "spec": T2Z2},
    ]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(manifest))
    code, out, _ = run(capsys, "verify", "--theorem", "thm3.4",
                       "--catalog", str(path), "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["all_pass"] is True
    assert [c["id"] for c in doc["checks"]] == ["thm3.4"]


def test_verify_unknown_theorem_exits_2(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "nope")
    assert code == 2
    assert "unknown theorem" in err


def test_verify_jobs_determinism_small(capsys, tmp_path):
    manifest = [
        {"name": "Z2", "spec": {"zn": 2}},
        {"name": "Z3", "spec": {"zn": 3}},
        {"name": "Z4", "spec": {"zn": 4}},
        {"name": "M2(Z2)", "spec": {"matrix": {"n": 2, "base": {"zn": 2}}}},
    ]
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(manifest))
    outputs = []
    for jobs in ("1", "3"):
        code, out, _ = run(capsys, "verify", "--catalog", str(path), "--json",
                           "--jobs", jobs, "--theorem", "prop2.1,thm3.4,thm3.10")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_threshold_env_override(spec_file, capsys, monkeypatch):
    monkeypatch.setenv("RINGLAB_THRESHOLD", "8")
    path = spec_file({"triangular": {"n": 2, "base": {"zn": 4}}})
    code, out, _ = run(capsys, "build", "--spec", path, "--json")
    assert code == 0
    assert json.loads(out)["order"] == 64
    monkeypatch.setenv("RINGLAB_THRESHOLD", "oops")
    code, _, err = run(capsys, "build", "--spec", path)
    assert code == 2


def test_usc_reading_flag_accepted(spec_file, capsys):
    path = spec_file({"zn": 3})
    code, out, _ = run(capsys, "classify", "--spec", path, "--json",
                       "--usc-reading", "at-most-one")
    assert code == 0


def test_lattice_limit_flag_forces_skip(spec_file, capsys):
    path = spec_file({"product": [{"zn": 2}] * 4})
    code, out, _ = run(capsys, "classify", "--spec", path, "--json",
                       "--lattice-limit", "5")
    assert code == 0
    doc = json.loads(out)
    assert doc["classification"]["is_quasi_duo_left"] == "skipped"
