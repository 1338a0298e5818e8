"""Thresholded decoding and multi-label metrics."""

from .metrics import binarize_predictions, gtd_score, hamming_loss, samples_prf
from .report import EvalConfig, MetricsReport, evaluate_run, write_metrics_report

__all__ = [
    "EvalConfig",
    "MetricsReport",
    "binarize_predictions",
    "evaluate_run",
    "gtd_score",
    "hamming_loss",
    "samples_prf",
    "write_metrics_report",
]
