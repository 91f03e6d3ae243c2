import json

import pytest

from petersonlab import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rootdata_show_json(capsys):
    code, out, _ = run(capsys, "rootdata", "show", "--type", "B2", "--json")
    assert code == 0
    assert json.loads(out) == {"name": "B2", "cartan": [[2, -1], [-2, 2]]}


def test_rootdata_show_unknown_type(capsys):
    code, _, err = run(capsys, "rootdata", "show", "--type", "E8")
    assert code == 2
    assert "unknown type" in err


def test_liealg_dump(capsys):
    code, out, _ = run(capsys, "liealg", "dump", "--type", "A2",
                       "--weight", "1,0")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 3
    assert len(data["e"]) == 2
    assert data["e"][0][0][1] == "1"


def test_group_eval(capsys):
    code, out, _ = run(capsys, "group", "eval", "--type", "A2",
                       "--word", "x1(3) s2 y1(1/2)",
                       "--module", "adjoint", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == 8
    assert len(data["matrix"]) == 8


def test_group_eval_bad_word(capsys):
    code, _, err = run(capsys, "group", "eval", "--type", "A2",
                       "--word", "z1(3)")
    assert code == 2
    assert "cannot parse" in err


def test_group_eval_sl2_reflection(capsys):
    code, out, _ = run(capsys, "group", "eval", "--type", "A1",
                       "--word", "s1", "--module", "1", "--json")
    assert code == 0
    assert json.loads(out)["matrix"] == [["0", "-1"], ["1", "0"]]


def test_psi_map(capsys):
    code, out, _ = run(capsys, "psi", "map", "--type", "A1",
                       "--J", "1", "--coords", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["x"] == ["3"] and data["y"] == ["1"]
    assert data["stratum"] == {"K": [], "J": [1]}


def test_polytope_build_off_and_json(tmp_path, capsys):
    off = tmp_path / "out.off"
    code, _, _ = run(capsys, "polytope", "build", "--type", "G2",
                     "--lambda", "1,1", "--off", str(off))
    assert code == 0
    text = off.read_text()
    assert text.startswith("nOFF\n2\n4 4 4\n")
    code, out, _ = run(capsys, "polytope", "build", "--type", "G2",
                       "--lambda", "1,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert len(data["faces"]) == 9


def test_toric_canon(capsys):
    code, out, _ = run(capsys, "toric", "canon", "--type", "A2",
                       "--point", "0,3;2,5", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["K"] == [1] and data["J"] == [1, 2]


def test_toric_moment(capsys):
    code, out, _ = run(capsys, "toric", "moment", "--type", "B2",
                       "--lambda", "1,1", "--point", "1,1;1,1", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["dilate"] == 2
    assert len(data["moment"]) == 2


def test_verify_pass_and_report_file(tmp_path, capsys):
    report = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "lemma53", "--type", "A1",
                       "--samples", "5", "--seed", "7",
                       "--report", str(report))
    assert code == 0
    data = json.loads(report.read_text())
    assert data["suite"] == "lemma53"
    assert data["seed"] == 7
    assert data["failures"] == []
    assert "seed 7" in out


def test_verify_stdout_default_seed(capsys):
    code, out, _ = run(capsys, "verify", "theorem59", "--type", "A1")
    assert code == 0
    data = json.loads(out)
    assert data["seed"] == 0
    assert data["ordering"] == "bourbaki"


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nosuchsuite"])
    assert exc.value.code == 2


def test_export_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.off", tmp_path / "b.off"
    for path in (a, b):
        code, _, _ = run(capsys, "export", "off", "--type", "B2",
                         "--lambda", "1,1", "--out", str(path))
        assert code == 0
    assert a.read_bytes() == b.read_bytes()

    c, d = tmp_path / "c.json", tmp_path / "d.json"
    for path in (c, d):
        code, _, _ = run(capsys, "export", "report-json", "--suite",
                         "theorem59", "--type", "A1", "--out", str(path))
        assert code == 0
    assert c.read_bytes() == d.read_bytes()


def test_export_facelattice_and_matrices(tmp_path, capsys):
    fl = tmp_path / "fl.json"
    code, _, _ = run(capsys, "export", "facelattice-json", "--type", "A2",
                     "--lambda", "2,1", "--out", str(fl))
    assert code == 0
    data = json.loads(fl.read_text())
    assert len(data["faces"]) == 9
    mj = tmp_path / "m.json"
    code, _, _ = run(capsys, "export", "matrices-json", "--type", "A1",
                     "--weight", "2", "--out", str(mj))
    assert code == 0
    assert json.loads(mj.read_text())["dimension"] == 3


def test_export_missing_args_usage_error(capsys):
    code, _, err = run(capsys, "export", "off", "--type", "B2")
    assert code == 2
    assert "needs" in err
