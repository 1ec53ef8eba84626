"""End-to-end orchestration with stage-named failures and stamped artifacts."""

from __future__ import annotations

import hashlib
import json
import logging
import os
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path

from ..dataset import label_regions
from ..embedding import EmbeddingMatrix, build_matrix, normalize_city, save_matrix, save_norm_sidecar
from ..h3core import get_resolution
from ..hexgrid import CellId, CityGrid, assign_features, save_grid, tessellate
from ..ingest import CityExtract, OverpassClient, fetch_city_extract
from ..model import ExperimentResult, PredictionMap, repeated_experiment
from . import workspace
from .config import CitySpec, PipelineConfig
from .heatmap import export_heatmap

log = logging.getLogger(__name__)

STAGE_HINTS = {
    "ingest": "verify the cache root, Overpass availability, and station file paths",
    "tessellate": "check the boundary source geometry",
    "embed": "check the embedding method and neighborhood settings",
    "label": "check station sources against the city boundary",
    "train": "check the imbalance ratio, iteration count, and station counts",
    "export": "check that the output directory is writable",
}


class PipelineError(RuntimeError):
    def __init__(self, stage: str, message: str):
        self.stage = stage
        super().__init__(f"stage '{stage}' failed: {message} (hint: {STAGE_HINTS[stage]})")


@contextmanager
def _stage(name: str):
    try:
        yield
    except PipelineError:
        raise
    except Exception as exc:
        raise PipelineError(name, str(exc)) from exc


@dataclass(frozen=True)
class CityAssets:
    extract: CityExtract
    grid: CityGrid
    matrix: EmbeddingMatrix


@dataclass(frozen=True)
class PipelineResult:
    fingerprint: str
    experiment: ExperimentResult
    artifacts: dict[str, Path]


def ingest_city(config: PipelineConfig, spec: CitySpec) -> CityExtract:
    client = OverpassClient(
        config.cache_root,
        endpoint=config.overpass_endpoint or None,
    )
    return fetch_city_extract(
        spec.name,
        spec.boundary_source(),
        config.cache_root,
        station_source=spec.station_source(),
        client=client,
    )


def build_city_grid(config: PipelineConfig, extract: CityExtract, resolution=None) -> CityGrid:
    resolution = resolution or config.resolution
    cells = tessellate(extract.boundary, resolution)
    grid = assign_features(extract, cells)
    path = workspace.grid_path(config.cache_root, extract.city_name, resolution)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_grid(grid, path)
    return grid


def build_city_matrix(
    config: PipelineConfig, grid: CityGrid, embedding_method=None, nc=None
) -> EmbeddingMatrix:
    embedding_method = embedding_method or config.embedding_method
    nc = nc or config.neighborhood
    raw = build_matrix(grid, embedding_method, nc)
    matrix = normalize_city(raw)
    key = workspace.matrix_key(embedding_method, grid.resolution, nc)
    path = workspace.matrix_path(config.cache_root, grid.city_name, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    save_matrix(matrix, path)
    save_norm_sidecar(matrix, workspace.norm_path(config.cache_root, grid.city_name, key))
    return matrix


def prepare_cities(config: PipelineConfig, names) -> dict[str, CityAssets]:
    """Ingest, tessellate, and embed the given cities, snapshotting each layer."""
    extracts = {}
    with _stage("ingest"):
        for name in names:
            extracts[name] = ingest_city(config, config.city(name))
    grids = {}
    with _stage("tessellate"):
        for name, extract in extracts.items():
            grids[name] = build_city_grid(config, extract)
    assets = {}
    with _stage("embed"):
        for name, grid in grids.items():
            assets[name] = CityAssets(extracts[name], grid, build_city_matrix(config, grid))
    return assets


def _stamp(config: PipelineConfig) -> dict:
    return {"config_fingerprint": config.fingerprint(), "base_seed": config.base_seed}


def _stamp_line(config: PipelineConfig, extra: dict | None = None) -> str:
    pairs = {**_stamp(config), **(extra or {})}
    return "# " + " ".join(f"{k}={v}" for k, v in sorted(pairs.items()))


def write_predictions_csv(path: Path, pred: PredictionMap, config: PipelineConfig) -> None:
    lines = [
        _stamp_line(config, {"city": pred.city_name, "resolution": pred.resolution}),
        "cell,probability",
    ]
    for cell in sorted(pred.probabilities):
        lines.append(f"{cell},{pred.probabilities[cell]!r}")
    path.write_text("\n".join(lines) + "\n")


def load_predictions_csv(path: str | Path) -> tuple[PredictionMap, dict]:
    """Rebuild a PredictionMap from the stamped CSV written by a run."""
    stamp = {}
    probabilities = {}
    resolution = None
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                for token in line[1:].split():
                    if "=" in token:
                        k, v = token.split("=", 1)
                        stamp[k] = v
                continue
            if line == "cell,probability":
                continue
            cell_text, prob_text = line.split(",")
            index = int(cell_text, 16)
            resolution = get_resolution(index)
            probabilities[CellId(index, resolution)] = float(prob_text)
    if resolution is None:
        raise ValueError(f"no predictions found in {path}")
    return PredictionMap(stamp.get("city", "unknown"), resolution, probabilities), stamp


def write_metrics_csv(path: Path, result: ExperimentResult, config: PipelineConfig) -> None:
    lines = [
        _stamp_line(config, {"eval_city": result.eval_city}),
        "iteration,accuracy,precision,recall,f1",
    ]
    for i, report in enumerate(result.reports):
        lines.append(
            f"{i},{report.accuracy!r},{report.precision!r},{report.recall!r},{report.f1!r}"
        )
    s = result.summary
    lines.append(f"mean,{s.accuracy!r},{s.precision!r},{s.recall!r},{s.f1!r}")
    path.write_text("\n".join(lines) + "\n")


def _sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    """The whole journey: raw map data to a stamped probability heatmap.

    Stages run in a fixed order and each failure names its stage. Re-running
    with an identical config reproduces the CSV and GeoJSON artifacts byte
    for byte: every random draw is derived from base_seed.
    """
    needed = sorted(set(config.train_cities) | {config.eval_city})
    assets = prepare_cities(config, needed)

    with _stage("label"):
        train_sets = []
        for name in config.train_cities:
            a = assets[name]
            labeled = label_regions(a.matrix, a.extract.stations)
            n_pos = sum(r.label for r in labeled)
            if n_pos == 0:
                raise ValueError(f"train city {name!r} has no station-bearing cells")
            train_sets.append((a.matrix, a.extract.stations))
        eval_assets = assets[config.eval_city]

    with _stage("train"):
        experiment = repeated_experiment(
            train_sets,
            eval_assets.matrix,
            eval_assets.extract.stations,
            ratio=config.imbalance_ratio,
            iterations=config.iterations,
            base_seed=config.base_seed,
            threshold=config.threshold,
            trees=config.trees,
        )

    with _stage("export"):
        out = Path(config.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        artifacts = {
            "predictions.csv": out / "predictions.csv",
            "metrics.csv": out / "metrics.csv",
            "heatmap.geojson": out / "heatmap.geojson",
            "run_manifest.json": out / "run_manifest.json",
        }
        write_predictions_csv(artifacts["predictions.csv"], experiment.predictions, config)
        write_metrics_csv(artifacts["metrics.csv"], experiment, config)
        export_heatmap(
            experiment.predictions,
            config.threshold,
            "geojson",
            artifacts["heatmap.geojson"],
            stamp=_stamp(config),
        )
        manifest = {
            "config_fingerprint": config.fingerprint(),
            "base_seed": config.base_seed,
            "iterations": config.iterations,
            "train_cities": list(config.train_cities),
            "eval_city": config.eval_city,
            "threshold": config.threshold,
            "snapshot_ids": {n: assets[n].extract.snapshot_id for n in needed},
            "artifacts": {
                n: _sha256_file(p)
                for n, p in artifacts.items()
                if n != "run_manifest.json"
            },
        }
        artifacts["run_manifest.json"].write_text(
            json.dumps(manifest, indent=1, sort_keys=True) + "\n"
        )

    return PipelineResult(config.fingerprint(), experiment, artifacts)
