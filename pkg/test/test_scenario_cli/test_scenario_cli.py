import io
import json
from pathlib import Path

import polars as pl
from pydantic import ValidationError
import pytest

from src.abstractions import NumericError
from src.models import ScenarioFile, Verdict

ASSETS = Path(__file__).resolve().parents[2] / "assets"


def run(cli, *argv):
    stream = io.StringIO()
    code = cli.run_application(list(argv), stdout=stream)
    return code, stream.getvalue()


def test_solve_running_example(cli, scenario_path):
    code, output = run(cli, "solve", str(scenario_path))
    assert code == 0
    report = json.loads(output)
    assert report["status_code"] == 200
    content = report["content"]
    assert content["solution"]["regime"] == "interior"
    assert content["solution"]["low_posterior"] == pytest.approx(0.22, abs=1e-9)
    assert content["threshold_effective"] == pytest.approx(0.72, abs=1e-9)
    assert content["outcome"]["lambda"] == pytest.approx(0.064, abs=1e-9)


def test_solve_preference_scenario(cli):
    code, output = run(cli, "solve", str(ASSETS / "scenarios" / "preference.json"))
    assert code == 0
    content = json.loads(output)["content"]
    assert content["binding"] is True
    assert content["assumption"]["slope_condition"] is True


def test_malformed_scenario_is_an_input_error(cli, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{\"mu\": 0.2,", encoding="utf-8")
    assert run(cli, "solve", str(broken))[0] == 2


def test_missing_scenario_is_an_input_error(cli, tmp_path):
    assert run(cli, "solve", str(tmp_path / "absent.json"))[0] == 2


def test_model_condition_is_an_input_error(cli, tmp_path, running_scenario):
    path = tmp_path / "biased_down.json"
    path.write_text(json.dumps({**running_scenario, "bias": {"who": "L", "mu_B": 0.1}}), encoding="utf-8")
    assert run(cli, "solve", str(path))[0] == 2


def test_unknown_command(cli):
    assert run(cli, "concavify")[0] == 2


def test_version(cli, capsys):
    assert run(cli, "--version")[0] == 0
    assert "1.0.0" in capsys.readouterr().out


def test_sweep_writes_csv(cli, scenario_path, tmp_path):
    out = tmp_path / "sweep.csv"
    code, output = run(cli, "sweep", str(scenario_path), "--who", "L", "--grid", "0.2:0.3:0.01", "--out", str(out))
    assert code == 0
    assert "rows" not in json.loads(output)["content"]
    table = pl.read_csv(out)
    assert table.height == 11
    assert {"mu_B", "who", "regime", "b", "lambda", "p_true"} <= set(table.columns)
    assert table["lambda"][0] == pytest.approx(0.1, abs=1e-9)


def test_sweep_prints_csv_without_destination(cli, scenario_path):
    code, output = run(cli, "sweep", str(scenario_path), "--grid", "0.2:0.22:0.01")
    assert code == 0
    lines = output.strip().splitlines()
    assert lines[0].startswith("mu_B,")
    assert len(lines) == 4


def test_sweep_empty_grid(cli, scenario_path):
    assert run(cli, "sweep", str(scenario_path), "--grid", "0.5:0.4:0.1")[0] == 2


def test_sweep_grid_below_prior(cli, scenario_path):
    assert run(cli, "sweep", str(scenario_path), "--grid", "0.1:0.3:0.1")[0] == 2


def test_verify_unknown_suite(cli):
    assert run(cli, "verify", "--suite", "prop9")[0] == 2


def test_verify_failed_claim_exits_one(cli, monkeypatch):
    failed = Verdict(claim="always_false", parameters={}, expected="true", observed=False, passed=False)
    monkeypatch.setattr("src.controllers.api_endpointfuncs.run_suite", lambda suite, quick: [failed])
    code, output = run(cli, "verify", "--suite", "thm1")
    assert code == 1
    assert json.loads(output)["content"]["passed"] is False


def test_verify_passing_suite(cli, monkeypatch):
    passed = Verdict(claim="always_true", parameters={"mu": 0.2}, expected="true", observed=True, passed=True)
    monkeypatch.setattr("src.controllers.api_endpointfuncs.run_suite", lambda suite, quick: [passed])
    code, output = run(cli, "verify", "--quick")
    assert code == 0
    content = json.loads(output)["content"]
    assert content["suite"] == "all"
    assert content["verdicts"][0]["claim"] == "always_true"


def test_numeric_error_exits_three(cli, scenario_path, monkeypatch):
    def fail(scenario):
        raise NumericError("quadrature did not converge", achieved_tolerance=1e-3)

    monkeypatch.setattr("src.controllers.api_endpointfuncs.solve_scenario", fail)
    assert run(cli, "solve", str(scenario_path))[0] == 3


def test_figure_requires_variance_cost(cli, entropy_path):
    assert run(cli, "figure", str(entropy_path))[0] == 2


def test_figure_unknown_case(cli, scenario_path):
    assert run(cli, "figure", str(scenario_path), "--case", "7")[0] == 2


def test_figure_writes_points(cli, scenario_path, tmp_path):
    out = tmp_path / "figure.csv"
    code, output = run(cli, "figure", str(scenario_path), "--out", str(out))
    assert code == 0
    metadata = json.loads(output)["content"]["metadata"]
    assert metadata["a_L"] == pytest.approx(0.72, abs=1e-9)
    assert metadata["b_L"] == pytest.approx(0.22, abs=1e-9)
    assert set(pl.read_csv(out).columns) == {"series", "x", "y"}


def test_example_scenarios_validate():
    paths = sorted((ASSETS / "scenarios").glob("*.json"))
    assert paths
    for path in paths:
        ScenarioFile.from_path(path)


def test_shipped_schema_matches_model():
    shipped = json.loads((ASSETS / "scenario.schema.json").read_text(encoding="utf-8"))
    generated = ScenarioFile.model_json_schema()
    assert set(shipped["properties"]) == set(generated["properties"])
    assert set(shipped["required"]) == set(generated["required"])
    assert set(shipped["$defs"]) == set(generated["$defs"])


def test_http_root(client):
    response = client.get("/")
    assert response.status_code == 200
    assert "/solve" in response.json()["endpoints"]


def test_http_solve(client, running_scenario):
    response = client.post("/solve", json={"scenario": running_scenario})
    assert response.status_code == 200
    assert response.json()["content"]["outcome"]["p_true"] == pytest.approx(0.128, abs=1e-9)


def test_http_sweep_domain_error(client, running_scenario):
    response = client.post("/sweep", json={"scenario": running_scenario, "grid": "0.5:0.4:0.1"})
    assert response.status_code == 422
    assert response.json()["content"] == {}


def test_http_sweep_rows(client, running_scenario):
    response = client.post("/sweep", json={"scenario": running_scenario, "grid": "0.2:0.24:0.01", "who": "DM"})
    assert response.status_code == 200
    rows = response.json()["content"]["rows"]
    assert [row["who"] for row in rows] == ["DM"] * 5
    assert "lambda" in rows[0]


def test_http_has_no_simulate_route(client, running_scenario):
    assert client.post("/simulate", json={"scenario": running_scenario}).status_code == 404


def test_verify_lemma1_suite(cli):
    code, output = run(cli, "verify", "--suite", "lemma1", "--quick")
    assert code == 0
    content = json.loads(output)["content"]
    assert content["passed"] is True
    assert {verdict["claim"] for verdict in content["verdicts"]} == {"lemma1_slope_sign", "lemma1_peak_location"}


@pytest.mark.parametrize(("mu_b", "valid"), [(0.22, True), (0.3, False), (0.7, True)])
def test_condition_1_uses_the_biased_threshold(running_scenario, mu_b, valid):
    data = {**running_scenario, "bias": {"who": "DM", "mu_B": mu_b}}
    if valid:
        assert ScenarioFile.model_validate(data).mu_B == mu_b
    else:
        with pytest.raises(ValidationError, match="Condition 1 violated"):
            ScenarioFile.model_validate(data)
