"""Labeled datasets: station labels, imbalance sampling, transfer splits."""

from .labels import LabeledRegion, label_regions
from .sampling import SamplingSpec, negative_count, sample_training
from .split import ExperimentSplit, build_transfer_split, split_to_csv

__all__ = [
    "ExperimentSplit",
    "LabeledRegion",
    "SamplingSpec",
    "build_transfer_split",
    "label_regions",
    "negative_count",
    "sample_training",
    "split_to_csv",
]
