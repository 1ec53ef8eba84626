"""Repeated seeded experiments and the cross-city transfer matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..dataset import SamplingSpec, label_regions, sample_training
from ..embedding import EmbeddingMatrix
from ..ingest import StationRecord
from .classifier import PredictionMap, matrix_fingerprint, predict, train_classifier
from .metrics import DEFAULT_THRESHOLD, EvaluationReport, evaluate_predictions

CityData = tuple[EmbeddingMatrix, Sequence[StationRecord]]


class ExperimentError(RuntimeError):
    """An iteration of a repeated experiment failed."""


@dataclass(frozen=True)
class MetricSummary:
    accuracy: float
    precision: float
    recall: float
    f1: float


@dataclass(frozen=True)
class ExperimentResult:
    """Averaged predictions and metrics over seeded reruns."""

    predictions: PredictionMap
    reports: tuple[EvaluationReport, ...]
    summary: MetricSummary
    flags: tuple[str, ...]
    train_cities: tuple[str, ...]
    eval_city: str
    iterations: int
    base_seed: int
    threshold: float


def _mean(values: Sequence[float]) -> float:
    return sum(values) / len(values)


def repeated_experiment(
    train_sets: Sequence[CityData],
    eval_matrix: EmbeddingMatrix,
    eval_stations: Sequence[StationRecord],
    ratio: float,
    iterations: int,
    base_seed: int,
    threshold: float = DEFAULT_THRESHOLD,
    trees: int = 100,
) -> ExperimentResult:
    """Run the train/predict/evaluate loop over consecutive seeds.

    Iteration i uses seed base_seed + i for both negative sampling and
    the forest, so a rerun with the same inputs is bit-identical. Cell
    probabilities are averaged arithmetically across iterations; metric
    summaries are plain means of the per-iteration reports. Any failing
    iteration aborts the whole experiment, naming the seed that failed.
    """
    if iterations < 1:
        raise ValueError("iterations must be at least 1")
    if not train_sets:
        raise ValueError("no training cities")
    eval_fp = matrix_fingerprint(eval_matrix)
    for m, _ in train_sets:
        if matrix_fingerprint(m) != eval_fp:
            raise ValueError(
                f"embedding config mismatch between {m.city_name} and {eval_matrix.city_name}"
            )
    train_labeled = [label_regions(m, s) for m, s in train_sets]
    eval_regions = label_regions(eval_matrix, eval_stations)
    reference = train_sets[0][0]

    order = sorted(eval_matrix.rows)
    prob_rows = []
    reports = []
    for i in range(iterations):
        seed = base_seed + i
        try:
            spec = SamplingSpec(ratio, seed)
            train_regions = []
            for labeled in train_labeled:
                train_regions.extend(sample_training(labeled, spec))
            clf = train_classifier(train_regions, reference, seed=seed, trees=trees)
            pmap = predict(clf, eval_matrix)
            reports.append(evaluate_predictions(pmap, eval_regions, threshold))
        except ExperimentError:
            raise
        except Exception as exc:
            raise ExperimentError(f"iteration {i} with seed {seed} failed: {exc}") from exc
        prob_rows.append(np.array([pmap.probabilities[c] for c in order]))

    mean_probs = np.mean(np.stack(prob_rows), axis=0)
    averaged = PredictionMap(
        eval_matrix.city_name,
        eval_matrix.resolution,
        {cell: float(p) for cell, p in zip(order, mean_probs)},
    )
    summary = MetricSummary(
        accuracy=_mean([r.accuracy for r in reports]),
        precision=_mean([r.precision for r in reports]),
        recall=_mean([r.recall for r in reports]),
        f1=_mean([r.f1 for r in reports]),
    )
    flags = tuple(sorted({f for r in reports for f in r.flags}))
    return ExperimentResult(
        predictions=averaged,
        reports=tuple(reports),
        summary=summary,
        flags=flags,
        train_cities=tuple(m.city_name for m, _ in train_sets),
        eval_city=eval_matrix.city_name,
        iterations=iterations,
        base_seed=base_seed,
        threshold=threshold,
    )


@dataclass(frozen=True)
class TransferResult:
    """Every train/eval city pairing, diagonals included."""

    order: tuple[str, ...]
    entries: dict[tuple[str, str], ExperimentResult]
    skipped: dict[tuple[str, str], str]

    def recall_table(self) -> dict[tuple[str, str], float | None]:
        """Mean recall per pairing; None where recall is not applicable."""
        table: dict[tuple[str, str], float | None] = {}
        for train_city in self.order:
            for eval_city in self.order:
                pair = (train_city, eval_city)
                entry = self.entries.get(pair)
                if entry is None or "recall_zero_division" in entry.flags:
                    table[pair] = None
                else:
                    table[pair] = entry.summary.recall
        return table


def transfer_matrix(
    cities: Sequence[CityData],
    ratio: float,
    iterations: int,
    base_seed: int,
    threshold: float = DEFAULT_THRESHOLD,
    trees: int = 100,
) -> TransferResult:
    """Cross-evaluate every city against every other, same-city included.

    Cities are ordered by station count, largest system first, names
    breaking ties. A city without stations cannot train a model, so its
    row is skipped with a reason; as an evaluation target it still gets
    predictions, just no applicable recall.
    """
    names = [m.city_name for m, _ in cities]
    if len(set(names)) != len(names):
        raise ValueError(f"duplicate city names: {names}")
    by_name = {m.city_name: (m, s) for m, s in cities}
    order = tuple(
        sorted(names, key=lambda n: (-len(by_name[n][1]), n))
    )
    entries: dict[tuple[str, str], ExperimentResult] = {}
    skipped: dict[tuple[str, str], str] = {}
    for train_city in order:
        train_data = by_name[train_city]
        for eval_city in order:
            pair = (train_city, eval_city)
            if not train_data[1]:
                skipped[pair] = f"{train_city} has no stations to train on"
                continue
            eval_matrix, eval_stations = by_name[eval_city]
            entries[pair] = repeated_experiment(
                [train_data], eval_matrix, eval_stations,
                ratio=ratio, iterations=iterations, base_seed=base_seed,
                threshold=threshold, trees=trees,
            )
    return TransferResult(order=order, entries=entries, skipped=skipped)
