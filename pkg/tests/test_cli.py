import json

import pytest

from ldcbench import cli, zoo


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_finrel(capsys):
    code, out, _ = run(capsys, "classify", "--builtin", "finrel", "--max-size", "2",
                       "--format", "json")
    assert code == 0
    doc = json.loads(out)
    cl = doc["classification"]
    assert cl["semi_additive"]["value"] and cl["compact"]["value"]
    assert not cl["posetal"]["value"]


def test_trivial_lattice(capsys):
    code, out, _ = run(capsys, "laws", "cldc", "--builtin", "bdl:chain:1")
    assert code == 0
    assert out.strip().endswith("overall: pass")


def test_kleisli_is_not_a_cldc(capsys):
    code, out, _ = run(capsys, "laws", "cldc", "--builtin", "kleisli:finset:1",
                       "--format", "json")
    assert code == 1
    doc = json.loads(out)
    bad = [r for r in doc["laws"] if r["status"] == "fail"]
    assert bad[-1]["id"] == "cldc.zero_forces_psi"
    assert bad[-1]["witness"]["objects"] == ["1", "1"]


def test_unknown_builtin(capsys):
    code, _, err = run(capsys, "validate", "--builtin", "nosuch")
    assert code == 2 and "unknown builtin" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "validate", "--file", str(tmp_path / "nope.json"))
    assert code == 2


def test_malformed_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{ not json")
    code, _, err = run(capsys, "validate", "--file", str(p))
    assert code == 2 and "line 1" in err


def test_bad_bound(capsys):
    code, _, _ = run(capsys, "validate", "--builtin", "finset:1", "--bound", "0")
    assert code == 2


def test_budget_exit(capsys, monkeypatch):
    monkeypatch.setattr(zoo.FinRel, "max_hom", 4)
    code, _, err = run(capsys, "validate", "--builtin", "finrel:2")
    assert code == 3 and "budget" in err


def test_json_is_deterministic(capsys):
    args = ("laws", "sldc", "--builtin", "bdl:boolean:2", "--format", "json")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--jobs", "4")
    assert a == b


def test_jobs_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.JOBS_ENV, "3")
    code, _, _ = run(capsys, "laws", "ldc", "--builtin", "finpar:1")
    assert code == 0
    monkeypatch.setenv(cli.JOBS_ENV, "many")
    code, _, _ = run(capsys, "laws", "ldc", "--builtin", "finpar:1")
    assert code == 2


@pytest.mark.parametrize("argv", [
    ("validate", "--builtin", "finpar:1"),
    ("laws", "appendix", "--builtin", "finpar:2"),
    ("laws", "duoidal", "--builtin", "bdl:boolean:2"),
    ("laws", "appendix", "--builtin", "wedge:finpar:1"),
    ("classify", "--builtin", "product:bdl:chain:2*finrel:1"),
])
def test_passing_runs(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out


def test_grothendieck_double_powerset_fails(capsys):
    code, out, _ = run(capsys, "laws", "cldc", "--builtin", "groth:P2:1")
    assert code == 1
    assert "P2.adjunction" in out


def test_construct_sz_then_reload(capsys, tmp_path):
    out = tmp_path / "sz.json"
    code, _, _ = run(capsys, "construct", "sz", "--builtin", "bdl:boolean:2",
                     "--out", str(out))
    assert code == 0 and out.exists()
    code, text, _ = run(capsys, "classify", "--file", str(out), "--format", "json")
    assert code == 0
    assert json.loads(text)["classification"]["posetal"]["value"]


def test_construct_bdl_from_file(capsys, tmp_path):
    lat = tmp_path / "l.json"
    lat.write_text(json.dumps(zoo.chain(3).to_dict()))
    code, _, _ = run(capsys, "construct", "bdl", "--lattice", str(lat),
                     "--out", str(tmp_path / "c.json"))
    assert code == 0


def test_construct_rejects_nondistributive(capsys, tmp_path):
    lat = tmp_path / "n5.json"
    lat.write_text(json.dumps({"elements": ["0", "a", "b", "c", "1"],
                               "leq": [["0", "a"], ["a", "b"], ["b", "1"],
                                       ["0", "c"], ["c", "1"]]}))
    code, _, err = run(capsys, "construct", "bdl", "--lattice", str(lat))
    assert code == 2 and "distributive" in err


def test_diff_wedge_against_direct(capsys):
    code, out, _ = run(capsys, "diff", "wedge:finpar:2", "finpar:2")
    assert code == 0, out


def test_diff_with_bad_functor(capsys, tmp_path):
    a = tmp_path / "a.json"
    run(capsys, "construct", "bdl", "--lattice", "chain:2", "--out", str(a))
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"objects": {"0": "1", "1": "0"}, "morphisms": {}}))
    code, _, _ = run(capsys, "diff", str(a), str(a), "--functor", str(f))
    assert code == 1
