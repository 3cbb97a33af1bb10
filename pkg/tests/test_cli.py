import json

import pytest

from a6curves.cli import Options, ScenarioReport, list_scenarios, main, run_scenario

FAST = "pencil.genus"


def test_list_has_all_scenarios(capsys):
    rows = list_scenarios()
    ids = [r[0] for r in rows]
    assert len(ids) >= 16 and "all" in ids
    assert {r[2] for r in rows} <= {"light", "medium", "heavy"}
    assert main(["list"]) == 0
    assert "pencil.locus" in capsys.readouterr().out


def test_report_json_roundtrip(tmp_path):
    rep = run_scenario(FAST, Options(cache_dir=str(tmp_path)))
    assert rep.status == "pass"
    again = ScenarioReport.from_json(rep.to_json())
    assert again.to_dict() == rep.to_dict()


def test_warm_cache_reports_match(tmp_path):
    opts = Options(cache_dir=str(tmp_path))
    cold = run_scenario("pencil.nodality.20250", opts).to_dict()
    warm = run_scenario("pencil.nodality.20250", opts).to_dict()
    cold.pop("wall_time"), warm.pop("wall_time")
    assert cold == warm


def test_exit_codes(tmp_path, capsys):
    assert main(["run", FAST, "--cache-dir", str(tmp_path), "--format", "json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["id"] == FAST and out["status"] == "pass"
    assert main(["run", "no.such.scenario", "--no-cache"]) == 3
    with pytest.raises(SystemExit) as exc:
        main(["run"])
    assert exc.value.code == 3
    assert main(["run", FAST, "--no-cache", "--jobs", "0"]) == 3


def test_budget_exceeded_exit(tmp_path):
    assert main(["run", "covers.genus19", "--no-cache", "--timeout-secs", "0"]) == 2


def test_poly_subcommands(tmp_path, capsys):
    f = tmp_path / "sys.txt"
    f.write_text("ring: vars=x,y; coeff=Q; order=degrevlex\nx^2 - y\ny^2 - 2\n")
    assert main(["poly", "vdim", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "4"
    assert main(["poly", "eliminate", str(f), "--vars", "y"]) == 0
    assert "x^4 - 2" in capsys.readouterr().out
    assert main(["poly", "gb", str(f), "--order", "lex"]) == 0
    assert "order=lex" in capsys.readouterr().out
    assert main(["poly", "resultant", str(f), "--var", "y"]) == 0
    assert "x^4 - 2" in capsys.readouterr().out
    g = tmp_path / "conic.txt"
    g.write_text("ring: vars=x,y,z; coeff=Q; order=degrevlex\nx^2 + y^2 - z^2\n")
    assert main(["poly", "hessian", str(g)]) == 0
    assert capsys.readouterr().out.strip().endswith("-8")
    assert main(["poly", "vdim", str(tmp_path / "missing.txt")]) == 3
