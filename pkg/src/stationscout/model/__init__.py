"""Classifier training, evaluation metrics, and transfer experiments."""

from .classifier import (
    DEFAULT_TREES,
    PredictionMap,
    StationClassifier,
    matrix_fingerprint,
    predict,
    train_classifier,
)
from .experiment import (
    ExperimentError,
    ExperimentResult,
    MetricSummary,
    TransferResult,
    repeated_experiment,
    transfer_matrix,
)
from .metrics import (
    DEFAULT_THRESHOLD,
    ConfusionCounts,
    EvaluationReport,
    confusion_counts,
    evaluate_predictions,
    report_from_counts,
)
from .store import MODEL_FORMAT_VERSION, load_model, save_model

__all__ = [
    "DEFAULT_THRESHOLD",
    "DEFAULT_TREES",
    "ConfusionCounts",
    "EvaluationReport",
    "ExperimentError",
    "ExperimentResult",
    "MODEL_FORMAT_VERSION",
    "MetricSummary",
    "PredictionMap",
    "StationClassifier",
    "TransferResult",
    "confusion_counts",
    "evaluate_predictions",
    "load_model",
    "matrix_fingerprint",
    "predict",
    "repeated_experiment",
    "report_from_counts",
    "save_model",
    "train_classifier",
    "transfer_matrix",
]
