"""Train/eval splits for in-city and cross-city experiments."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from ..embedding import EmbeddingMatrix
from ..ingest import StationRecord
from .labels import LabeledRegion, label_regions
from .sampling import SamplingSpec, sample_training


@dataclass(frozen=True)
class ExperimentSplit:
    """Sampled training regions and the full evaluation city."""

    train: tuple[LabeledRegion, ...]
    eval: tuple[LabeledRegion, ...]
    train_city: str
    eval_city: str
    spec: SamplingSpec


def build_transfer_split(
    train_matrix: EmbeddingMatrix,
    train_stations: Sequence[StationRecord],
    eval_matrix: EmbeddingMatrix,
    eval_stations: Sequence[StationRecord],
    spec: SamplingSpec,
) -> ExperimentSplit:
    """Sample a training set from one city and label every cell of another.

    Both matrices must share the embedding config and column layout;
    mixing incompatible feature spaces is an error, not a warning. The
    eval side is never subsampled: predictions cover the whole city.
    """
    if train_matrix.config != eval_matrix.config:
        raise ValueError(
            "embedding config mismatch between train and eval matrices: "
            f"{train_matrix.config} vs {eval_matrix.config}"
        )
    if train_matrix.column_semantics != eval_matrix.column_semantics:
        raise ValueError("embedding config mismatch: column layouts differ")
    train = tuple(sample_training(label_regions(train_matrix, train_stations), spec))
    eval_regions = tuple(label_regions(eval_matrix, eval_stations))
    return ExperimentSplit(
        train, eval_regions, train_matrix.city_name, eval_matrix.city_name, spec
    )


def split_to_csv(split: ExperimentSplit, path: str | Path) -> None:
    """Audit export: which cells ended up in which role, with labels."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["cell", "label", "role"])
        for region in split.train:
            writer.writerow([str(region.cell), region.label, "train"])
        for region in split.eval:
            writer.writerow([str(region.cell), region.label, "eval"])
