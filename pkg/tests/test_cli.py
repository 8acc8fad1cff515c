import json
from pathlib import Path

import pytest

from polar_ch2 import cli

FIX = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check_case_one(capsys):
    code, out, _ = run(capsys, "check", "--subalgebra", str(FIX / "g0.json"), "--section", str(FIX / "g0_section.json"), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] and rep["section_type"] == "RH2" and rep["cohomogeneity"] == 2


def test_check_non_subalgebra(capsys):
    code, _, err = run(capsys, "check", "--subalgebra", str(FIX / "not_subalgebra.json"), "--section", str(FIX / "g0_section.json"))
    assert code == 2
    assert "bracket closure violated" in err and "[U1, U2] = Z" in err


def test_check_schema_violation(capsys):
    code, _, err = run(capsys, "check", "--subalgebra", str(FIX / "bad_schema.json"), "--section", str(FIX / "g0_section.json"))
    assert code == 2 and "basis/0" in err


def test_check_malformed_json(tmp_path, capsys):
    bad = tmp_path / "h.json"
    bad.write_text('{"basis": [\n  [0, 0,\n')
    code, _, err = run(capsys, "check", "--subalgebra", str(bad), "--section", str(FIX / "g0_section.json"))
    assert code == 2 and "line" in err


def test_check_raw_matrix_input(capsys):
    code, out, _ = run(capsys, "check", "--subalgebra", str(FIX / "a_matrix.json"), "--section", str(FIX / "g0_section.json"), "--json")
    rep = json.loads(out)
    assert code == 1 and rep["orbit_tangent"] == ["B"] and rep["cohomogeneity"] == 3


def test_unknown_flag():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify-all", "--bogus"])
    assert exc.value.code == 2


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify-all", "--json", "--samples", "20")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] and rep["catalog"]["polar_count"] == 10


def test_verify_all_fault(capsys):
    code, out, _ = run(capsys, "verify-all", "--json", "--samples", "20", "--fault", "ii.b")
    rep = json.loads(out)
    assert code == 1
    row = next(r for r in rep["catalog"]["entries"] if r["id"] == "ii.b")
    assert not row["checks"]["bracket_orthogonality"]
    assert any(r["check"] == "bracket_orthogonality" for r in row["residuals"])


def test_verify_all_unknown_fault(capsys):
    code, _, err = run(capsys, "verify-all", "--fault", "zz")
    assert code == 2


def test_markdown_table(capsys):
    code, out, _ = run(capsys, "verify-all", "--markdown", "--samples", "10")
    assert code == 0 and out.count("| polar |") == 10


def test_seed_environment(monkeypatch, capsys):
    monkeypatch.setenv(cli.SEED_ENV, "11")
    _, out, _ = run(capsys, "lemma-suite", "--samples", "10", "--json")
    assert json.loads(out)["seed"] == 11
    _, out, _ = run(capsys, "lemma-suite", "--samples", "10", "--json", "--seed", "4")
    assert json.loads(out)["seed"] == 4
    monkeypatch.setenv(cli.SEED_ENV, "abc")
    code, _, _ = run(capsys, "lemma-suite", "--samples", "10")
    assert code == 2


def test_basis_print(capsys):
    code, out, _ = run(capsys, "basis", "--print")
    assert code == 0 and "1/2 U1" in out
    code, out, _ = run(capsys, "basis", "--json")
    d = json.loads(out)
    assert len(d["matrices"]) == 8 and d["bracket_table"][4][5] == "1/2 U1"


def test_orbits_export(tmp_path, capsys):
    code, out, _ = run(capsys, "orbits", "--entry", "ii.c", "--out", str(tmp_path), "--grid", "3:1")
    assert code == 0
    assert (tmp_path / "orbit_ii_c.csv").read_text().startswith("entry_id,t1,t2,x1,y1,x2,y2\n")
    assert json.loads((tmp_path / "orbit_ii_c.json").read_text())["metadata"]["grid"] == "3:1"
    code, _, _ = run(capsys, "orbits", "--entry", "nope", "--out", str(tmp_path))
    assert code == 2
    code, _, _ = run(capsys, "orbits", "--entry", "ii.c", "--out", str(tmp_path), "--grid", "a")
    assert code == 2
