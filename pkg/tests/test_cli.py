import json

from dihyper.cli import run_cli
from dihyper.harness import parse_census_json, parse_compare_json, parse_counts_json


def run(capsys, *argv):
    code = run_cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_formula_eval_text(capsys):
    code, out, _ = run(
        capsys, "formula", "--family", "acyclic", "--b", "2", "--n", "4",
        "--eval", "1",
    )
    assert code == 0
    assert out == "1 1 3 25 543\n"


def test_formula_text_polynomials(capsys):
    code, out, _ = run(capsys, "formula", "--family", "strong", "--b", "2", "--n", "3")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n=0: 0"
    assert lines[2] == "n=2: y^2"
    assert lines[3] == "n=3: 2*y^3 + 9*y^4 + 6*y^5 + y^6"


def test_formula_json(capsys):
    code, out, _ = run(
        capsys, "formula", "--family", "acyclic", "--b", "2", "--n", "3",
        "--format", "json",
    )
    assert code == 0
    seq = parse_counts_json(out)
    assert seq.method == "reciprocal"
    assert seq.evaluated(1) == [1, 1, 3, 25]


def test_formula_csv_with_method(capsys):
    code, out, _ = run(
        capsys, "formula", "--family", "acyclic", "--b", "2", "--n", "2",
        "--method", "recurrence", "--format", "csv",
    )
    assert code == 0
    assert out.splitlines()[0] == "b,n,family,method,q,count"
    assert "2,2,acyclic,recurrence,1,2" in out


def test_formula_out_file(capsys, tmp_path):
    target = tmp_path / "counts.json"
    code, out, _ = run(
        capsys, "formula", "--family", "total", "--b", "2", "--n", "2",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert parse_counts_json(target.read_text()).evaluated(1) == [1, 1, 4]


def test_formula_rejects_method_family_mismatch(capsys):
    code, _, err = run(
        capsys, "formula", "--family", "acyclic", "--b", "2", "--n", "3",
        "--method", "inversion",
    )
    assert code == 2
    assert "error:" in err


def test_formula_rejects_small_b(capsys):
    code, _, err = run(capsys, "formula", "--family", "total", "--b", "1", "--n", "3")
    assert code == 2
    assert "error:" in err


def test_oracle_text(capsys):
    code, out, _ = run(capsys, "oracle", "--b", "2", "--n", "2")
    assert code == 0
    assert "census n=2 b=2 universe=2" in out
    assert "strong:  y^2" in out


def test_oracle_json(capsys):
    code, out, _ = run(
        capsys, "oracle", "--b", "2", "--n", "3", "--format", "json",
        "--backend", "numpy", "--jobs", "2",
    )
    assert code == 0
    summary = parse_census_json(out)
    assert summary.acyclic.evaluate(1) == 25
    assert summary.strong.evaluate(1) == 18


def test_oracle_csv_out(capsys, tmp_path):
    target = tmp_path / "census.csv"
    code, out, _ = run(
        capsys, "oracle", "--b", "2", "--n", "2", "--format", "csv",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert "2,2,total,census,0,1" in target.read_text()


def test_oracle_cap_exit_code(capsys):
    code, _, err = run(capsys, "oracle", "--b", "2", "--n", "8", "--cap", "20")
    assert code == 3
    assert "cap" in err


def test_oracle_bad_n(capsys):
    code, _, err = run(capsys, "oracle", "--b", "2", "--n", "-1")
    assert code == 2
    assert "error:" in err


def test_compare_match(capsys):
    code, out, err = run(
        capsys, "compare", "--family", "acyclic", "--b", "2", "--n-max", "3",
        "--strict",
    )
    assert code == 0
    assert parse_compare_json(out).verdict == "match"
    assert "verdict: match" in err


def test_compare_strict_mismatch(capsys):
    code, out, err = run(
        capsys, "compare", "--family", "acyclic", "--b", "3", "--n-max", "3",
        "--strict",
    )
    assert code == 1
    report = parse_compare_json(out)
    assert report.verdict == "mismatch"
    assert report.first_mismatch() == (3, 1, 0, 6)
    assert "first mismatch at n=3, q=1" in err


def test_compare_mismatch_without_strict(capsys):
    code, out, _ = run(
        capsys, "compare", "--family", "strong", "--b", "3", "--n-max", "3",
    )
    assert code == 0
    assert parse_compare_json(out).first_mismatch() == (3, 1, 6, 0)


def test_compare_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, err = run(
        capsys, "compare", "--family", "strong", "--b", "2", "--n-max", "3",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert "verdict: match" in err
    assert parse_compare_json(target.read_text()).verdict == "match"


def test_compare_capped_verdict(capsys):
    code, out, _ = run(
        capsys, "compare", "--family", "acyclic", "--b", "2", "--n-max", "5",
        "--cap", "12", "--strict",
    )
    assert code == 0  # unavailable is not a mismatch
    assert parse_compare_json(out).verdict == "oracle-unavailable"


def test_check_suites_pass(capsys):
    for suite in ("marked-source", "fixtures"):
        code, out, _ = run(capsys, "check", "--suite", suite)
        assert code == 0
        assert "checks passed" in out
        assert "FAIL" not in out


def test_fixtures_output(capsys):
    code, out, _ = run(capsys, "fixtures", "--name", "fig2")
    assert code == 0
    assert "fixture: fig2" in out
    assert "{1,3} -> {2}" in out
    assert "strongly connected: no" in out


def test_bad_arguments_exit_2(capsys):
    assert run(capsys, "formula", "--family", "acyclic")[0] == 2
    assert run(capsys, "oracle", "--b", "2", "--n", "3", "--backend", "gpu")[0] == 2
    assert run(capsys, "check", "--suite", "everything")[0] == 2
    assert run(capsys, "nonsense")[0] == 2


def test_help_exits_zero(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys, "formula", "--help")[0] == 0


def test_console_script_wiring():
    import dihyper.cli as cli

    assert callable(cli.main)
    payload = json.loads(
        __import__("subprocess").run(
            ["dihyper", "formula", "--family", "acyclic", "--b", "2", "--n", "2",
             "--format", "json"],
            capture_output=True, text=True, check=True,
        ).stdout
    )
    assert payload[2]["coeffs"] == [["0", "1"], ["1", "2"]]
