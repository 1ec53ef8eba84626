"""Neighborhood combination of a center vector with its ring vectors."""

from dataclasses import dataclass

import numpy as np

COMBINATION_METHODS = ("concatenate", "average", "diminishing", "squared_diminishing")


@dataclass(frozen=True)
class NeighborhoodConfig:
    K: int
    method: str

    def __post_init__(self):
        if self.K < 0:
            raise ValueError("K must be >= 0")
        if self.method not in COMBINATION_METHODS:
            raise ValueError(f"unknown combination method {self.method!r}")


def _ring_means(ring_vecs, n: int):
    means = []
    for ring in ring_vecs:
        arr = np.asarray(ring, dtype=float)
        if arr.size == 0:
            # empty ring at the city edge: zero vector, full weight
            means.append(np.zeros(n))
            continue
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        if arr.shape[-1] != n:
            raise ValueError(f"ring vector dimension {arr.shape[-1]} != {n}")
        means.append(arr.reshape(-1, n).mean(axis=0))
    return means


def combine_neighborhood(center_vec, ring_vecs, config: NeighborhoodConfig) -> np.ndarray:
    """Fold K ring vector groups into one vector.

    Ring cell vectors are averaged per ring first. concatenate returns
    [center | mean_1 | .. | mean_K]; the other methods return a
    weighted mean of center and ring means with center weight 1 and
    ring-k weight 1 (average), 1/(k+1) (diminishing) or 1/(k+1)^2
    (squared_diminishing).
    """
    center = np.asarray(center_vec, dtype=float)
    if center.ndim != 1:
        raise ValueError("center must be a 1-d vector")
    if len(ring_vecs) != config.K:
        raise ValueError(f"expected {config.K} rings, got {len(ring_vecs)}")
    means = _ring_means(ring_vecs, center.shape[0])

    if config.method == "concatenate":
        return np.concatenate([center, *means]) if means else center.copy()

    if config.method == "average":
        weights = np.ones(config.K + 1)
    elif config.method == "diminishing":
        weights = np.array([1.0 / (k + 1) for k in range(config.K + 1)])
    else:
        weights = np.array([1.0 / (k + 1) ** 2 for k in range(config.K + 1)])

    stacked = np.vstack([center, *means]) if means else center.reshape(1, -1)
    return (weights[:, None] * stacked).sum(axis=0) / weights.sum()
