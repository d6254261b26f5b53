import json

from click.testing import CliRunner

from torsion_bounds.cli import main
from torsion_bounds.render import decimal_str


def run(*args, env=None):
    return CliRunner().invoke(main, list(args), env=env, catch_exceptions=False)


def test_lie_rank_csv():
    result = run("lie-rank", "--degrees", "2:1,3:1", "--upto", "6")
    assert result.exit_code == 0
    # RFC 4180: CRLF row endings (CliRunner's .output normalizes them away)
    assert result.stdout_bytes == b"N,rank\r\n1,0\r\n2,1\r\n3,1\r\n4,0\r\n5,1\r\n6,1\r\n"


def test_lie_rank_oracle_flag():
    result = run("lie-rank", "--degrees", "1:2", "--upto", "10", "--oracle-check")
    assert result.exit_code == 0


def test_lie_rank_bad_degrees_exit_code():
    result = run("lie-rank", "--degrees", "2:1,1:1", "--upto", "5")
    assert result.exit_code == 1


def test_roots_json_schema():
    result = run("roots", "--degrees", "2:1,4:1", "--format", "json")
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["g"] == 2
    assert payload["phi"].startswith("1.2720196495140689")
    assert len(payload["roots"]) == 4


def test_bound_requires_route():
    result = run("bound", "--p", "3", "--upto", "10")
    assert result.exit_code == 1


def test_bound_homology_json():
    result = run(
        "bound", "--homology", "--q", "2", "--p", "3", "--upto", "4", "--format", "json"
    )
    assert result.exit_code == 0
    rows = json.loads(result.output)
    assert [row["degree"] for row in rows] == [2, 3, 4]
    for row in rows:
        assert set(row) >= {"degree", "bound", "exact_rank", "theorem", "vacuous", "precision_bits"}
        assert row["exact_rank"] is None
        assert row["vacuous"] is True


def test_bound_ktheory_csv_deterministic():
    args = (
        "bound", "--ktheory", "--degrees", "2:1,4:1", "--conn", "1", "--dim", "4",
        "--p", "3", "--from", "380", "--upto", "384",
    )
    first = run(*args)
    second = run(*args)
    assert first.exit_code == 0
    assert first.output == second.output
    assert "ktheory_guaranteed" in first.output and "ktheory_weak" in first.output


def test_bezout_json_with_witnesses():
    result = run(
        "bezout", "--alpha", "3", "--beta", "4", "--a", "1/2", "--n", "1",
        "--cap", "120", "--witnesses", "--format", "json",
    )
    assert result.exit_code == 0
    payload = json.loads(result.output)
    assert payload["certificate"][0]["B"] == "92"
    assert payload["witnesses"]["1"]["99"] in range(1, 21)


def test_dgl_csv():
    result = run("dgl", "--q", "2", "--p", "3", "--upto", "6")
    assert result.exit_code == 0
    lines = result.stdout_bytes.decode().strip().split("\r\n")
    assert lines[0] == "degree,dim,cycles,boundaries,homology"
    assert lines[2] == "2,1,1,1,0"
    assert lines[5] == "5,1,1,1,0"


def test_report_moore_json_and_determinism():
    args = ("report", "--space", "moore", "--q", "2", "--p", "3", "--r", "1",
            "--upto", "30", "--format", "json")
    first = run(*args)
    second = run(*args)
    assert first.exit_code == 0
    assert first.output == second.output
    rows = json.loads(first.output)
    assert len(rows) == 29
    assert rows[0]["theorem"] == "homology_boundary"


def test_report_unknown_space_exit_code():
    result = run("report", "--space", "torus", "--p", "3", "--upto", "10")
    assert result.exit_code == 1


def test_report_parameter_mismatch_exit_code():
    result = run("report", "--space", "moore", "--p", "3", "--upto", "10")
    assert result.exit_code == 1


def test_report_out_file(tmp_path):
    target = tmp_path / "table.csv"
    result = run(
        "report", "--space", "moore", "--q", "2", "--p", "3", "--r", "1",
        "--upto", "5", "--out", str(target),
    )
    assert result.exit_code == 0
    raw = target.read_bytes()
    assert raw.startswith(b"degree,bound,exact_rank,theorem,vacuous,precision_bits\r\n")


def test_precision_env_override():
    result = run(
        "report", "--space", "moore", "--q", "2", "--p", "3", "--r", "1",
        "--upto", "3", "--format", "json", env={"TORSION_BOUNDS_PRECISION": "1024"},
    )
    rows = json.loads(result.output)
    assert all(row["precision_bits"] >= 1024 for row in rows)


def test_verify_suite_combinat():
    result = run("verify", "--suite", "combinat")
    assert result.exit_code == 0
    assert "0 failures" in result.output


def test_decimal_str_plain_notation():
    from mpmath import mpf

    assert decimal_str(mpf("0.0001220703125")) == "0.0001220703125"
    assert decimal_str(mpf(2) ** 70) == "1180591620717411303424"  # 22 digits, exact
    assert decimal_str(mpf(2) ** 100).startswith("12676506002282294014967")  # 24 sig digits
    assert decimal_str(mpf(0)) == "0"
    assert decimal_str(5) == "5"
    assert "e" not in decimal_str(mpf("1e-30")).lower()
