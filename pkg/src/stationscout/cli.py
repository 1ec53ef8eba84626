"""Command-line interface for the station siting toolkit."""

from __future__ import annotations

import functools
import json
from pathlib import Path

import click

from .dataset import SamplingSpec, label_regions, sample_training
from .embedding import matrix_to_csv
from .model import TransferResult, save_model, train_classifier, transfer_matrix
from .pipeline import (
    ConfigError,
    PipelineConfig,
    PipelineError,
    create_app,
    export_heatmap,
    load_config,
    load_predictions_csv,
    run_pipeline,
    sweep,
    sweep_to_csv,
)
from .pipeline import run as run_mod
from .pipeline import workspace


def _guard(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (ConfigError, PipelineError, ValueError, OSError) as exc:
            raise click.ClickException(str(exc)) from exc

    return wrapper


def config_options(fn):
    """Flags mirroring the tunable PipelineConfig fields."""
    options = [
        click.option("--cache-root", default=None, help="Snapshot and HTTP cache directory."),
        click.option("--output-dir", default=None, help="Artifact output directory."),
        click.option("--resolution", type=click.Choice(["9", "10", "11"]), default=None),
        click.option("--embedding-method", default=None),
        click.option("--neighborhood-method", default=None),
        click.option("-K", "--neighborhood-size", "k", type=int, default=None),
        click.option("--ratio", type=float, default=None, help="Negatives per positive."),
        click.option("--iterations", type=int, default=None),
        click.option("--threshold", type=float, default=None),
        click.option("--base-seed", type=int, default=None),
        click.option("--trees", type=int, default=None),
        click.option("--train-city", "train_cities", multiple=True),
        click.option("--eval-city", default=None),
    ]
    for opt in reversed(options):
        fn = opt(fn)
    return fn


def _load(config_path, cache_root=None, output_dir=None, resolution=None,
          embedding_method=None, neighborhood_method=None, k=None, ratio=None,
          iterations=None, threshold=None, base_seed=None, trees=None,
          train_cities=(), eval_city=None) -> PipelineConfig:
    config = load_config(config_path)
    return config.with_overrides(
        cache_root=cache_root,
        output_dir=output_dir,
        resolution=int(resolution) if resolution else None,
        embedding_method=embedding_method,
        neighborhood_method=neighborhood_method,
        K=k,
        imbalance_ratio=ratio,
        iterations=iterations,
        threshold=threshold,
        base_seed=base_seed,
        trees=trees,
        train_cities=list(train_cities) or None,
        eval_city=eval_city,
    )


def _selected(config: PipelineConfig, cities):
    names = [s.name for s in config.cities]
    for name in cities:
        if name not in names:
            raise click.ClickException(f"city {name!r} is not in the config")
    return list(cities) or names


@click.group()
def main():
    """Micro-region embeddings and station-probability heatmaps."""


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--city", "cities", multiple=True, help="Limit to these cities.")
@click.option("--cache-root", default=None)
@_guard
def ingest(config_path, cities, cache_root):
    """Fetch (or replay) map data and station lists into the cache."""
    config = _load(config_path, cache_root=cache_root)
    for name in _selected(config, cities):
        extract = run_mod.ingest_city(config, config.city(name))
        click.echo(
            f"{name}: {len(extract.features)} features, "
            f"{len(extract.stations)} stations, snapshot {extract.snapshot_id[:12]}"
        )


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--city", "cities", multiple=True)
@config_options
@_guard
def grid(config_path, cities, **overrides):
    """Tessellate city boundaries and assign features to cells."""
    config = _load(config_path, **overrides)
    for name in _selected(config, cities):
        extract = run_mod.ingest_city(config, config.city(name))
        city_grid = run_mod.build_city_grid(config, extract)
        d = city_grid.diagnostics
        click.echo(
            f"{name}: {len(city_grid.cells)} cells at res {config.resolution}, "
            f"{d.assigned} assignments ({d.skipped_invalid} invalid, "
            f"{d.dropped_outside} outside)"
        )


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--city", "cities", multiple=True)
@config_options
@_guard
def embed(config_path, cities, **overrides):
    """Build and normalize embedding matrices, one snapshot per city."""
    config = _load(config_path, **overrides)
    key = workspace.matrix_key(
        config.embedding_method, config.resolution, config.neighborhood
    )
    for name in _selected(config, cities):
        extract = run_mod.ingest_city(config, config.city(name))
        city_grid = run_mod.build_city_grid(config, extract)
        matrix = run_mod.build_city_matrix(config, city_grid)
        csv_path = workspace.city_dir(config.cache_root, name) / f"matrix_{key}.csv"
        matrix_to_csv(matrix, csv_path)
        width = len(matrix.column_semantics)
        click.echo(f"{name}: {len(matrix.rows)} cells x {width} columns -> {csv_path}")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@config_options
@_guard
def train(config_path, out_path, **overrides):
    """Train one forest on the configured training cities and save it."""
    config = _load(config_path, **overrides)
    assets = run_mod.prepare_cities(config, config.train_cities)
    spec = SamplingSpec(config.imbalance_ratio, config.base_seed)
    regions = []
    for name in config.train_cities:
        labeled = label_regions(assets[name].matrix, assets[name].extract.stations)
        regions.extend(sample_training(labeled, spec))
    reference = assets[config.train_cities[0]].matrix
    clf = train_classifier(regions, reference, seed=config.base_seed, trees=config.trees)
    save_model(clf, out_path)
    click.echo(
        f"trained on {len(regions)} regions from {', '.join(config.train_cities)}; "
        f"fingerprint {clf.fingerprint} -> {out_path}"
    )


def _echo_metrics(result):
    s = result.experiment.summary
    click.echo(
        f"{result.experiment.eval_city}: accuracy {s.accuracy:.3f}, "
        f"precision {s.precision:.3f}, recall {s.recall:.3f}, F1 {s.f1:.3f} "
        f"over {result.experiment.iterations} iterations"
    )
    if result.experiment.flags:
        click.echo(f"flags: {', '.join(result.experiment.flags)}")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@config_options
@_guard
def predict(config_path, **overrides):
    """Run the full pipeline and export the stamped heatmap artifacts."""
    config = _load(config_path, **overrides)
    result = run_pipeline(config)
    for name, path in result.artifacts.items():
        click.echo(f"{name}: {path}")
    _echo_metrics(result)


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@config_options
@_guard
def evaluate(config_path, **overrides):
    """Run the pipeline and report per-iteration and mean metrics."""
    config = _load(config_path, **overrides)
    result = run_pipeline(config)
    click.echo("iteration,accuracy,precision,recall,f1")
    for i, report in enumerate(result.experiment.reports):
        click.echo(
            f"{i},{report.accuracy:.4f},{report.precision:.4f},"
            f"{report.recall:.4f},{report.f1:.4f}"
        )
    _echo_metrics(result)


def _parse_axis_values(axis: str, text: str):
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if axis == "resolution_and_K":
            values.append(tuple(token.split(":", 1)))
        elif axis == "imbalance_ratio":
            try:
                values.append(float(token))
            except ValueError:
                values.append(token)
        else:
            values.append(token)
    return values


@main.command("sweep")
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--axis", required=True,
              type=click.Choice(["neighborhood_method", "embedding_method",
                                 "imbalance_ratio", "resolution_and_K"]))
@click.option("--values", required=True,
              help="Comma-separated; resolution_and_K uses res:K pairs.")
@click.option("--out", "out_path", required=True, type=click.Path())
@config_options
@_guard
def sweep_cmd(config_path, axis, values, out_path, **overrides):
    """Sweep one study axis and write the metric table."""
    config = _load(config_path, **overrides)
    report = sweep(config, axis, _parse_axis_values(axis, values))
    sweep_to_csv(report, config, out_path)
    click.echo(f"{len(report.rows)} rows -> {out_path}")
    for value, reason in report.skipped:
        click.echo(f"skipped {value}: {reason}")


def _transfer_to_csv(result: TransferResult, config: PipelineConfig, path):
    table = result.recall_table()
    lines = [
        run_mod._stamp_line(config, {"table": "recall"}),
        "train_city," + ",".join(result.order),
    ]
    for train_city in result.order:
        row = [train_city]
        for eval_city in result.order:
            value = table[(train_city, eval_city)]
            row.append("n/a" if value is None else repr(value))
        lines.append(",".join(row))
    for pair, reason in sorted(result.skipped.items()):
        lines.append(f"# skipped {pair[0]}->{pair[1]}: {reason}")
    Path(path).write_text("\n".join(lines) + "\n")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--out", "out_path", required=True, type=click.Path())
@config_options
@_guard
def transfer(config_path, out_path, **overrides):
    """Cross-evaluate every configured city against every other."""
    config = _load(config_path, **overrides)
    names = [spec.name for spec in config.cities]
    assets = run_mod.prepare_cities(config, names)
    datasets = [(assets[n].matrix, assets[n].extract.stations) for n in names]
    result = transfer_matrix(
        datasets,
        ratio=config.imbalance_ratio,
        iterations=config.iterations,
        base_seed=config.base_seed,
        threshold=config.threshold,
        trees=config.trees,
    )
    _transfer_to_csv(result, config, out_path)
    click.echo(f"{len(result.order)}x{len(result.order)} recall matrix -> {out_path}")


@main.command()
@click.option("--predictions", "predictions_path", required=True,
              type=click.Path(exists=True), help="predictions.csv from a pipeline run.")
@click.option("--threshold", type=float, default=0.5, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["geojson", "html"]),
              default="geojson", show_default=True)
@click.option("--out", "out_path", required=True, type=click.Path())
@_guard
def export(predictions_path, threshold, fmt, out_path):
    """Re-export a saved prediction map as a filtered heatmap."""
    pred, stamp = load_predictions_csv(predictions_path)
    keep = {k: v for k, v in stamp.items() if k in ("config_fingerprint", "base_seed")}
    count = export_heatmap(pred, threshold, fmt, out_path, stamp=keep or None)
    click.echo(f"{count} cells >= {threshold} -> {out_path}")
    if count == 0:
        click.echo("warning: no cell reached the threshold; wrote an empty collection")


@main.command()
@click.option("--config", "config_path", required=True, type=click.Path(exists=True))
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--cache-root", default=None)
@_guard
def serve(config_path, host, port, cache_root):
    """Serve prepared snapshots over HTTP for the planner UI."""
    import uvicorn

    config = _load(config_path, cache_root=cache_root)
    app = create_app(config)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
