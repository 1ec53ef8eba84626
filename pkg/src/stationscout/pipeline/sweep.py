"""Hyperparameter sweeps along one study axis at a time."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from ..embedding import COMBINATION_METHODS, EMBEDDING_METHODS, NeighborhoodConfig
from ..model import repeated_experiment
from . import run as run_mod
from .config import K_CAPS, PipelineConfig

log = logging.getLogger(__name__)

SWEEP_AXES = (
    "neighborhood_method",
    "embedding_method",
    "imbalance_ratio",
    "resolution_and_K",
)


@dataclass(frozen=True)
class SweepRow:
    resolution: int
    parameter: str
    accuracy: float
    f1: float
    precision: float
    recall: float


@dataclass(frozen=True)
class SweepReport:
    axis: str
    rows: tuple[SweepRow, ...]
    skipped: tuple[tuple[str, str], ...]  # (value, reason)


def _check_value(axis: str, value, resolution: int):
    """Returns (normalized value, None) or (None, reason to skip)."""
    if axis == "neighborhood_method":
        if value not in COMBINATION_METHODS:
            return None, f"unsupported neighborhood method {value!r}"
        return value, None
    if axis == "embedding_method":
        if value not in EMBEDDING_METHODS:
            return None, f"unsupported embedding method {value!r}"
        return value, None
    if axis == "imbalance_ratio":
        try:
            ratio = float(value)
        except (TypeError, ValueError):
            return None, f"not a number: {value!r}"
        if not 1.0 <= ratio <= 5.0:
            return None, f"ratio {ratio} outside [1, 5]"
        return ratio, None
    if axis == "resolution_and_K":
        try:
            res, k = int(value[0]), int(value[1])
        except (TypeError, ValueError, IndexError):
            return None, f"expected a (resolution, K) pair, got {value!r}"
        if res not in K_CAPS:
            return None, f"unsupported resolution {res}"
        if not 0 <= k <= K_CAPS[res]:
            return None, f"K={k} outside the tested range 0..{K_CAPS[res]} at resolution {res}"
        return (res, k), None
    raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")


def sweep(config: PipelineConfig, axis: str, values) -> SweepReport:
    """One table row per value of the study axis, everything else fixed.

    Unsupported values are skipped with a warning and recorded in the
    report instead of failing the whole sweep. Ingests and grids are
    shared across values, so only the varying layers are recomputed.
    """
    if axis not in SWEEP_AXES:
        raise ValueError(f"unknown sweep axis {axis!r}; expected one of {SWEEP_AXES}")

    needed = sorted(set(config.train_cities) | {config.eval_city})
    extracts = {name: run_mod.ingest_city(config, config.city(name)) for name in needed}
    grids: dict[tuple[str, int], object] = {}
    matrices: dict[tuple, object] = {}

    def matrix_for(name: str, resolution: int, method: str, nc: NeighborhoodConfig):
        key = (name, resolution, method, nc.K, nc.method)
        if key not in matrices:
            gkey = (name, resolution)
            if gkey not in grids:
                grids[gkey] = run_mod.build_city_grid(config, extracts[name], resolution)
            matrices[key] = run_mod.build_city_matrix(
                config, grids[gkey], embedding_method=method, nc=nc
            )
        return matrices[key]

    rows = []
    skipped = []
    for raw_value in values:
        value, reason = _check_value(axis, raw_value, config.resolution)
        if reason is not None:
            log.warning("sweep %s: skipping %r: %s", axis, raw_value, reason)
            skipped.append((str(raw_value), reason))
            continue

        resolution = config.resolution
        method = config.embedding_method
        nc = config.neighborhood
        ratio = config.imbalance_ratio
        if axis == "neighborhood_method":
            nc = NeighborhoodConfig(nc.K, value)
            parameter = value
        elif axis == "embedding_method":
            method = value
            parameter = value
        elif axis == "imbalance_ratio":
            ratio = value
            parameter = f"{value:g}"
        else:
            resolution, k = value
            nc = NeighborhoodConfig(k, nc.method)
            parameter = f"K={k}"

        train_sets = [
            (matrix_for(n, resolution, method, nc), extracts[n].stations)
            for n in config.train_cities
        ]
        eval_matrix = matrix_for(config.eval_city, resolution, method, nc)
        result = repeated_experiment(
            train_sets,
            eval_matrix,
            extracts[config.eval_city].stations,
            ratio=ratio,
            iterations=config.iterations,
            base_seed=config.base_seed,
            threshold=config.threshold,
            trees=config.trees,
        )
        rows.append(
            SweepRow(
                resolution=resolution,
                parameter=parameter,
                accuracy=result.summary.accuracy,
                f1=result.summary.f1,
                precision=result.summary.precision,
                recall=result.summary.recall,
            )
        )
    return SweepReport(axis, tuple(rows), tuple(skipped))


def sweep_to_csv(report: SweepReport, config: PipelineConfig, path: str | Path) -> None:
    lines = [
        run_mod._stamp_line(config, {"axis": report.axis}),
        "resolution,parameter,accuracy,f1,precision,recall",
    ]
    for r in report.rows:
        lines.append(
            f"{r.resolution},{r.parameter},{r.accuracy!r},{r.f1!r},{r.precision!r},{r.recall!r}"
        )
    for value, reason in report.skipped:
        lines.append(f"# skipped {value}: {reason}")
    Path(path).write_text("\n".join(lines) + "\n")
