"""Subcommand behavior through click's test runner."""

import json

import pytest
from click.testing import CliRunner

from stationscout.cli import main
from stationscout.model import load_model
from stationscout.pipeline import CACHE_ROOT_ENV_VAR, load_predictions_csv


@pytest.fixture(scope="module")
def cli_env(fixture_env, tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    doc = fixture_env["make_config"](iterations=2, output_dir=str(root / "out"))
    config_path = root / "config.json"
    config_path.write_text(json.dumps(doc))
    return {"root": root, "config": str(config_path), "doc": doc}


@pytest.fixture(scope="module")
def runner():
    return CliRunner()


def test_ingest_reports_counts(cli_env, runner):
    result = runner.invoke(main, ["ingest", "--config", cli_env["config"]])
    assert result.exit_code == 0, result.output
    assert "Greenfield: 426 features, 25 stations" in result.output
    assert "Harborview: 376 features, 20 stations" in result.output


def test_grid_reports_cells(cli_env, runner):
    result = runner.invoke(
        main, ["grid", "--config", cli_env["config"], "--city", "Greenfield"]
    )
    assert result.exit_code == 0, result.output
    assert "Greenfield: 957 cells at res 11" in result.output


def test_embed_writes_matrix_csv(cli_env, runner):
    result = runner.invoke(
        main, ["embed", "--config", cli_env["config"], "--city", "Greenfield"]
    )
    assert result.exit_code == 0, result.output
    cache = cli_env["doc"]["cache_root"]
    csv_path = (
        f"{cache}/greenfield/matrix_category_counting_res11_K5_squared_diminishing.csv"
    )
    assert "-> " in result.output
    with open(csv_path) as fh:
        header = fh.readline()
    assert header.startswith("cell,")


def test_predict_then_export_roundtrip(cli_env, runner, tmp_path):
    result = runner.invoke(main, ["predict", "--config", cli_env["config"]])
    assert result.exit_code == 0, result.output
    assert "heatmap.geojson" in result.output
    assert "F1" in result.output

    predictions = f"{cli_env['doc']['output_dir']}/predictions.csv"
    pred, _ = load_predictions_csv(predictions)
    expected = sum(1 for p in pred.probabilities.values() if p >= 0.35)

    out = tmp_path / "re.geojson"
    result = runner.invoke(main, [
        "export", "--predictions", predictions,
        "--threshold", "0.35", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert len(json.loads(out.read_text())["features"]) == expected

    html_out = tmp_path / "re.html"
    result = runner.invoke(main, [
        "export", "--predictions", predictions,
        "--threshold", "0.35", "--format", "html", "--out", str(html_out)])
    assert result.exit_code == 0, result.output
    assert "<svg" in html_out.read_text()


def test_evaluate_prints_iterations(cli_env, runner):
    result = runner.invoke(main, ["evaluate", "--config", cli_env["config"]])
    assert result.exit_code == 0, result.output
    lines = result.output.strip().splitlines()
    assert "iteration,accuracy,precision,recall,f1" in lines
    start = lines.index("iteration,accuracy,precision,recall,f1")
    assert lines[start + 1].startswith("0,")
    assert lines[start + 2].startswith("1,")


def test_train_saves_loadable_model(cli_env, runner, tmp_path):
    out = tmp_path / "model.bin"
    result = runner.invoke(main, [
        "train", "--config", cli_env["config"], "--out", str(out)])
    assert result.exit_code == 0, result.output
    clf = load_model(out)
    assert clf.resolution == 11
    assert f"fingerprint {clf.fingerprint}" in result.output


def test_sweep_writes_rows(cli_env, runner, tmp_path):
    out = tmp_path / "sweep.csv"
    result = runner.invoke(main, [
        "sweep", "--config", cli_env["config"],
        "--axis", "imbalance_ratio", "--values", "1,2",
        "--iterations", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "2 rows" in result.output
    lines = out.read_text().strip().splitlines()
    assert lines[1] == "resolution,parameter,accuracy,f1,precision,recall"
    assert len(lines) == 4


def test_transfer_writes_recall_matrix(cli_env, runner, tmp_path):
    out = tmp_path / "recall.csv"
    result = runner.invoke(main, [
        "transfer", "--config", cli_env["config"],
        "--iterations", "1", "--out", str(out)])
    assert result.exit_code == 0, result.output
    assert "2x2 recall matrix" in result.output
    lines = out.read_text().strip().splitlines()
    # Greenfield first: 25 stations beats Harborview's 20
    assert lines[1] == "train_city,Greenfield,Harborview"
    for line in lines[2:4]:
        cells = line.split(",")[1:]
        for cell in cells:
            assert cell == "n/a" or 0.0 <= float(cell) <= 1.0


def test_bad_resolution_fails_with_message(cli_env, runner, tmp_path):
    doc = dict(cli_env["doc"], resolution=12)
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    result = runner.invoke(main, ["grid", "--config", str(path)])
    assert result.exit_code != 0
    assert "resolution" in result.output


def test_cache_root_env_var(cli_env, runner, tmp_path):
    doc = dict(cli_env["doc"])
    del doc["cache_root"]
    path = tmp_path / "envcfg.json"
    path.write_text(json.dumps(doc))
    result = runner.invoke(
        main,
        ["ingest", "--config", str(path), "--city", "Greenfield"],
        env={CACHE_ROOT_ENV_VAR: cli_env["doc"]["cache_root"]},
    )
    assert result.exit_code == 0, result.output
    assert "Greenfield: 426 features" in result.output
