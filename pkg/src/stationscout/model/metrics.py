"""Confusion-matrix metrics with explicit zero-division handling."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from ..dataset import LabeledRegion
from .classifier import PredictionMap

DEFAULT_THRESHOLD = 0.5


class ConfusionCounts(NamedTuple):
    tp: int
    fp: int
    tn: int
    fn: int


@dataclass(frozen=True)
class EvaluationReport:
    counts: ConfusionCounts
    accuracy: float
    precision: float
    recall: float
    f1: float
    flags: tuple[str, ...]


def confusion_counts(labels: Sequence[int], predicted: Sequence[int]) -> ConfusionCounts:
    if len(labels) != len(predicted):
        raise ValueError("labels and predictions differ in length")
    tp = fp = tn = fn = 0
    for label, pred in zip(labels, predicted):
        if label == 1:
            if pred == 1:
                tp += 1
            else:
                fn += 1
        else:
            if pred == 1:
                fp += 1
            else:
                tn += 1
    return ConfusionCounts(tp, fp, tn, fn)


def report_from_counts(counts: ConfusionCounts) -> EvaluationReport:
    """Derive accuracy, precision, recall, and F1 from raw counts.

    Undefined ratios become 0.0 and are flagged rather than raising:
    a city without stations has no recall to speak of, but the rest of
    the report is still worth reading.
    """
    tp, fp, tn, fn = counts
    total = tp + fp + tn + fn
    flags = []
    if total:
        accuracy = (tp + tn) / total
    else:
        accuracy = 0.0
        flags.append("accuracy_zero_division")
    if tp + fp:
        precision = tp / (tp + fp)
    else:
        precision = 0.0
        flags.append("precision_zero_division")
    if tp + fn:
        recall = tp / (tp + fn)
    else:
        recall = 0.0
        flags.append("recall_zero_division")
    if precision + recall:
        f1 = 2 * precision * recall / (precision + recall)
    else:
        f1 = 0.0
        flags.append("f1_zero_division")
    return EvaluationReport(counts, accuracy, precision, recall, f1, tuple(sorted(flags)))


def evaluate_predictions(
    predictions: PredictionMap,
    regions: Sequence[LabeledRegion],
    threshold: float = DEFAULT_THRESHOLD,
) -> EvaluationReport:
    """Threshold probabilities and compare against region labels.

    A probability greater than or equal to the threshold counts as a
    predicted station. Every labeled region must have a prediction.
    """
    labels = []
    preds = []
    for region in regions:
        try:
            prob = predictions.probabilities[region.cell]
        except KeyError:
            raise ValueError(f"prediction missing for cell {region.cell}") from None
        labels.append(region.label)
        preds.append(1 if prob >= threshold else 0)
    return report_from_counts(confusion_counts(labels, preds))
