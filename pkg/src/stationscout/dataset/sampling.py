"""Class-imbalance control for training sets."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .labels import LabeledRegion


@dataclass(frozen=True)
class SamplingSpec:
    """How to subsample negatives: ratio of negatives per positive, and the seed."""

    ratio: float
    seed: int

    def __post_init__(self) -> None:
        if not 1.0 <= self.ratio <= 5.0:
            raise ValueError(f"imbalance ratio must be within [1, 5], got {self.ratio}")
        if self.seed < 0:
            raise ValueError("seed must be non-negative")


def negative_count(ratio: float, positives: int) -> int:
    # round half up, not banker's rounding: 7.5 -> 8
    return math.floor(ratio * positives + 0.5)


def sample_training(
    labeled: Sequence[LabeledRegion], spec: SamplingSpec
) -> list[LabeledRegion]:
    """All positives plus ratio * positives negatives, drawn without replacement.

    The draw uses a PCG64 generator seeded from the spec, so the same spec
    on the same labeled set reproduces the same training set exactly.
    """
    positives = sorted((r for r in labeled if r.label == 1), key=lambda r: r.cell)
    negatives = sorted((r for r in labeled if r.label == 0), key=lambda r: r.cell)
    if not positives:
        raise ValueError("no positive regions to train on")
    needed = negative_count(spec.ratio, len(positives))
    if needed > len(negatives):
        raise ValueError(
            f"need {needed} negative regions but only {len(negatives)} available"
        )
    rng = np.random.Generator(np.random.PCG64(spec.seed))
    chosen = rng.choice(len(negatives), size=needed, replace=False)
    return positives + [negatives[i] for i in chosen]
