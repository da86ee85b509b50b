import json

import pytest
from typer.testing import CliRunner

from src import cli
from src.identities import checks
from src.polynomials import generalized
from src.polynomials.generalized import ROUTE_CLASSICAL, phi_AS
from src.polynomials.intpoly import X

runner = CliRunner()


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for name in ("CYCLO_MAX_N", "CYCLO_VERIFY_MAX_N", "CYCLO_WORKERS"):
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)


def invoke(*args: str, env: dict[str, str] | None = None):
    return runner.invoke(cli.app, list(args), env=env)


def test_parse_range():
    assert cli.parse_range("3..6") == [3, 4, 5, 6]
    assert cli.parse_range("7..7") == [7]
    for bad in ("6..3", "0..4", "1-4", "a..b"):
        with pytest.raises(ValueError):
            cli.parse_range(bad)


def test_phi_text():
    result = invoke("phi", "--system", "D", "--set", "squares", "--n", "4")
    assert result.exit_code == cli.EXIT_PASS
    assert "Phi_{D,squares,4}(x) = x^3 - x^2 + x - 1" in result.stdout
    assert "coeffs = [-1, 1, -1, 1]" in result.stdout


def test_phi_json_coefficients_are_strings():
    result = invoke("phi", "--system", "U", "--set", "one", "--n", "12", "--format", "json")
    assert result.exit_code == cli.EXIT_PASS
    payload = json.loads(result.stdout)
    assert payload["degree"] == 6
    assert payload["coeffs"] == ["1", "-1", "0", "1", "0", "-1", "1"]


def test_phi_json_range_is_a_list():
    result = invoke("phi", "--range", "1..4", "--format", "json")
    payload = json.loads(result.stdout)
    assert [item["n"] for item in payload] == [1, 2, 3, 4]


def test_factor():
    result = invoke("factor", "--system", "U", "--set", "one", "--n", "12")
    assert result.exit_code == cli.EXIT_PASS
    assert "Phi_6 * Phi_12" in result.stdout

    result = invoke("factor", "--system", "U", "--set", "one", "--n", "12", "--format", "json")
    assert json.loads(result.stdout)["factors"] == [[6, 1], [12, 1]]


def test_verify_passes():
    result = invoke("verify", "--identity", "kappa,ramanujan", "--system", "D,U", "--range", "1..12", "--workers", "1")
    assert result.exit_code == cli.EXIT_PASS
    assert "Results: 48 passed, 0 failed out of 48 reports" in result.stdout


def test_verify_json():
    result = invoke("verify", "--identity", "exp-odd", "--n", "16", "--format", "json", "--workers", "1")
    assert result.exit_code == cli.EXIT_PASS
    (report,) = json.loads(result.stdout)
    assert report["identity"] == "exp-odd"
    assert report["status"] == "pass"


def test_verify_list_sets_use_semicolons():
    result = invoke(
        "verify", "--identity", "gen3", "--system", "D", "--set", "list:1,2;squares", "--n", "6", "--workers", "1"
    )
    assert result.exit_code == cli.EXIT_PASS
    assert "set=list:1,2" in result.stdout
    assert "set=squares" in result.stdout


def test_verify_failure_exits_one(monkeypatch):
    monkeypatch.setattr(checks, "phi_A", lambda A, n: X)
    result = invoke("verify", "--identity", "product-xn", "--system", "D", "--range", "1..3", "--workers", "1")
    assert result.exit_code == cli.EXIT_VERIFICATION_FAILED
    assert "FAIL product-xn" in result.stdout


@pytest.mark.parametrize(
    "args",
    [
        ("phi", "--system", "Z", "--n", "4"),
        ("phi", "--set", "cubes", "--n", "4"),
        ("phi", "--n", "4", "--range", "1..4"),
        ("phi",),
        ("phi", "--range", "5..1"),
        ("phi", "--n", "4", "--format", "yaml"),
        ("verify", "--identity", "nope", "--n", "4"),
        ("verify", "--identity", "kappa", "--n", "4", "--precision-bits", "32"),
        ("--log-level", "chatty", "phi", "--n", "4"),
        ("--env", "missing", "phi", "--n", "4"),
    ],
)
def test_usage_errors_exit_two(args):
    assert invoke(*args).exit_code == cli.EXIT_USAGE


def test_cap_comes_from_environment():
    assert invoke("phi", "--n", "6", env={"CYCLO_MAX_N": "5"}).exit_code == cli.EXIT_USAGE
    assert invoke("phi", "--n", "5", env={"CYCLO_MAX_N": "5"}).exit_code == cli.EXIT_PASS
    assert invoke("verify", "--identity", "kappa", "--n", "9", env={"CYCLO_VERIFY_MAX_N": "8"}).exit_code == cli.EXIT_USAGE
    assert invoke("verify", "--identity", "kappa", "--n", "9", env={"CYCLO_MAX_N": "8"}).exit_code == cli.EXIT_USAGE


def test_max_n_lifts_the_verify_cap():
    args = ("verify", "--identity", "kappa", "--system", "D", "--n", "150", "--workers", "1")
    assert invoke(*args).exit_code == cli.EXIT_USAGE
    assert invoke(*args, env={"CYCLO_MAX_N": "200"}).exit_code == cli.EXIT_PASS


def test_route_mismatch_exits_three(monkeypatch):
    phi_AS.cache_clear()
    monkeypatch.setitem(generalized._ROUTES, ROUTE_CLASSICAL, lambda A, S, n: X)
    try:
        result = invoke("phi", "--system", "U", "--n", "12")
    finally:
        phi_AS.cache_clear()
    assert result.exit_code == cli.EXIT_IDENTITY_VIOLATION


def test_table_text_and_json():
    result = invoke("table", "--system", "D", "--set", "squares", "--range", "1..6", "--k", "2")
    assert result.exit_code == cli.EXIT_PASS
    header = result.stdout.splitlines()[0].split()
    assert header == ["n", "system", "set", "phi_AS", "mu_AS", "h_AS", "k", "c_AS_k"]

    result = invoke("table", "--system", "D", "--set", "nonone", "--range", "1..3", "--format", "json")
    rows = json.loads(result.stdout)
    assert [row["n"] for row in rows] == [1, 2, 3]
    assert all(row["h_AS"] is None for row in rows)
