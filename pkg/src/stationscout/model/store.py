"""Versioned model persistence."""

from __future__ import annotations

from pathlib import Path

from ..snapshot import SnapshotError, load_snapshot, save_snapshot
from .classifier import StationClassifier

MODEL_SNAPSHOT_KIND = "station-model"
MODEL_FORMAT_VERSION = 1


def save_model(clf: StationClassifier, path: str | Path) -> None:
    payload = {
        "version": MODEL_FORMAT_VERSION,
        "fingerprint": clf.fingerprint,
        "feature_names": clf.feature_names,
        "resolution": clf.resolution,
        "seed": clf.seed,
        "forest": clf.forest,
    }
    save_snapshot(payload, path, MODEL_SNAPSHOT_KIND)


def load_model(
    path: str | Path,
    expected_fingerprint: str | None = None,
    force: bool = False,
) -> StationClassifier:
    """Load a saved model, refusing silent feature-space drift.

    Passing the fingerprint of the matrix you intend to score lets the
    load fail fast instead of predicting garbage later; force overrides
    that check but nothing else.
    """
    payload = load_snapshot(path, MODEL_SNAPSHOT_KIND)
    version = payload.get("version")
    if version != MODEL_FORMAT_VERSION:
        raise SnapshotError(
            f"unsupported model format version {version!r}, expected {MODEL_FORMAT_VERSION}"
        )
    if (
        expected_fingerprint is not None
        and payload["fingerprint"] != expected_fingerprint
        and not force
    ):
        raise ValueError(
            f"model fingerprint {payload['fingerprint']} does not match "
            f"expected {expected_fingerprint}; pass force=True to load anyway"
        )
    return StationClassifier(
        forest=payload["forest"],
        fingerprint=payload["fingerprint"],
        feature_names=tuple(payload["feature_names"]),
        resolution=payload["resolution"],
        seed=payload["seed"],
    )
