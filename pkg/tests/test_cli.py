import json
import os

from click.testing import CliRunner

from rubikmap.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args), catch_exceptions=False)


def test_info():
    result = run("info", "--catalog", "prism3")
    assert result.exit_code == 0
    assert "vertices:    6" in result.output
    assert "genus:       0" in result.output


def test_order_cube():
    result = run("order", "--catalog", "cube")
    assert result.exit_code == 0
    assert result.output.strip() == "43252003274489856000"


def test_build_and_load_file(tmp_path):
    path = str(tmp_path / "m.json")
    assert run("build", "--catalog", "prism4", "--out", path).exit_code == 0
    result = run("info", "--map", path)
    assert result.exit_code == 0
    assert "vertices:    8" in result.output


def test_map_and_catalog_are_exclusive():
    assert run("info").exit_code != 0
    assert run("info", "--catalog", "cube", "--map", "x.json").exit_code != 0


def test_unknown_catalog_fails():
    result = run("order", "--catalog", "pyramid")
    assert result.exit_code == 1


def test_export_script(tmp_path):
    path = str(tmp_path / "prism3.g")
    assert run("export-script", "--catalog", "prism3", "--out", path).exit_code == 0
    text = open(path).read()
    assert text.startswith("#")
    assert "Rubik_prism3 := Group([" in text
    again = str(tmp_path / "again.g")
    run("export-script", "--catalog", "prism3", "--out", again)
    assert open(again, "rb").read() == open(path, "rb").read()


def test_scramble_deterministic_and_solve(tmp_path):
    state = str(tmp_path / "s.json")
    first = run("scramble", "--catalog", "prism3", "--seed", "9", "--moves", "10",
                "--out", state)
    second = run("scramble", "--catalog", "prism3", "--seed", "9", "--moves", "10")
    assert first.output.splitlines()[0] == second.output.splitlines()[0]
    solved = run("solve", "--state", state)
    assert solved.exit_code == 0
    assert solved.output.strip()


def test_solve_unscrambled_is_empty(tmp_path):
    state = str(tmp_path / "s.json")
    run("scramble", "--catalog", "prism3", "--seed", "1", "--moves", "0",
        "--out", state)
    result = run("solve", "--state", state)
    assert result.exit_code == 0
    assert result.output.strip() == "(empty)"


def test_verify_single_map():
    result = run("verify", "--catalog", "tetrahedron", "--format", "csv")
    assert result.exit_code == 0
    assert "tetrahedron" in result.output
    assert ",True," in result.output


def test_verify_out_of_scope_fails():
    assert run("verify", "--catalog", "theta").exit_code == 1


def test_suite_small_with_outputs(tmp_path):
    out = str(tmp_path / "reports")
    result = run("suite", "--maps", "prism3,tetrahedron", "--format", "csv",
                 "--out", out)
    assert result.exit_code == 0
    assert os.path.exists(os.path.join(out, "suite.csv"))
    assert os.path.exists(os.path.join(out, "suite.json"))
    assert os.path.exists(os.path.join(out, "orders.png"))
    doc = json.load(open(os.path.join(out, "suite.json")))
    assert [r["name"] for r in doc["reports"]] == ["prism3", "tetrahedron"]
    assert all(r["pass"] for r in doc["reports"])


def test_suite_budget_zero_fails_and_allows_override():
    args = ["suite", "--maps", "prism3", "--budget-seconds", "0", "--format", "csv"]
    strict = CliRunner().invoke(main, args)
    assert strict.exit_code == 2
    lax = CliRunner().invoke(main, args + ["--allow-failures"])
    assert lax.exit_code == 0
