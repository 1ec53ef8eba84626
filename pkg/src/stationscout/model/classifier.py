"""Random-forest station classifier over embedded micro-regions."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from sklearn.ensemble import RandomForestClassifier

from ..dataset import LabeledRegion
from ..embedding import EmbeddingMatrix
from ..hexgrid import CellId

DEFAULT_TREES = 100


def matrix_fingerprint(matrix: EmbeddingMatrix) -> str:
    """Digest of the feature-space contract a model is bound to.

    Covers resolution, neighborhood combination, and column layout, so
    a model trained on one embedding configuration refuses matrices
    built with another.
    """
    doc = {
        "resolution": matrix.resolution,
        "neighborhood_k": matrix.config.K,
        "neighborhood_method": matrix.config.method,
        "columns": list(matrix.column_semantics),
    }
    blob = json.dumps(doc, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


@dataclass(frozen=True)
class StationClassifier:
    forest: RandomForestClassifier
    fingerprint: str
    feature_names: tuple[str, ...]
    resolution: int
    seed: int

    def importances(self) -> np.ndarray:
        """Per-feature importance scores, non-negative and summing to one."""
        return np.asarray(self.forest.feature_importances_, dtype=float)


@dataclass(frozen=True)
class PredictionMap:
    """Per-cell probability that a micro-region hosts a station."""

    city_name: str
    resolution: int
    probabilities: dict[CellId, float] = field(compare=False)

    def positives_at(self, threshold: float) -> frozenset[CellId]:
        return frozenset(c for c, p in self.probabilities.items() if p >= threshold)


def train_classifier(
    regions: Sequence[LabeledRegion],
    reference: EmbeddingMatrix,
    seed: int,
    trees: int = DEFAULT_TREES,
) -> StationClassifier:
    """Fit a seeded random forest on sampled training regions.

    The forest keeps library defaults apart from size and seed: no depth
    cap, one-sample leaves, no class weighting. Both labels must be
    present; a single-class training set cannot rank anything.
    """
    if not regions:
        raise ValueError("empty training set")
    labels = {r.label for r in regions}
    if len(labels) < 2:
        raise ValueError(f"training set contains a single class: {labels}")
    width = len(reference.column_semantics)
    for r in regions:
        if r.features.shape != (width,):
            raise ValueError(
                f"region {r.cell} has {r.features.shape} features, expected ({width},)"
            )
    X = np.vstack([r.features for r in regions])
    y = np.array([r.label for r in regions], dtype=int)
    forest = RandomForestClassifier(n_estimators=trees, random_state=seed, n_jobs=1)
    forest.fit(X, y)
    return StationClassifier(
        forest=forest,
        fingerprint=matrix_fingerprint(reference),
        feature_names=tuple(reference.column_semantics),
        resolution=reference.resolution,
        seed=seed,
    )


def predict(clf: StationClassifier, matrix: EmbeddingMatrix) -> PredictionMap:
    """Score every cell of a city; nothing is dropped or thresholded here.

    The probability of a cell is the fraction of trees voting that it
    hosts a station.
    """
    if not matrix.normalized:
        raise ValueError("matrix must be normalized before prediction")
    fp = matrix_fingerprint(matrix)
    if fp != clf.fingerprint:
        raise ValueError(
            "embedding config mismatch: model was trained for fingerprint "
            f"{clf.fingerprint}, matrix has {fp}"
        )
    order = sorted(matrix.rows)
    if not order:
        return PredictionMap(matrix.city_name, matrix.resolution, {})
    X = np.vstack([matrix.rows[c] for c in order])
    pos_index = int(np.where(clf.forest.classes_ == 1)[0][0])
    votes = np.stack([est.predict(X) for est in clf.forest.estimators_])
    fractions = (votes == pos_index).mean(axis=0)
    return PredictionMap(
        matrix.city_name,
        matrix.resolution,
        {cell: float(p) for cell, p in zip(order, fractions)},
    )
