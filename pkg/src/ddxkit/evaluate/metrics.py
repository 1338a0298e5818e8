"""Multi-label metrics: Hamming loss, samples-averaged P/R/F1, GTD score.

Decoding is inclusive: a label enters the differential when its probability is
greater than or equal to the threshold. GTD's top-k mode ranks all labels by
probability (ties broken by ascending label index) with no threshold.
"""

from __future__ import annotations

import numpy as np

from ..errors import IndexOutOfRange, ShapeMismatch, ValueOutOfRange
from .. import errors
from ..model.predict import PredictionSet


def binarize_predictions(preds: PredictionSet, t: float) -> np.ndarray:
    """N x M bit matrix: 1 iff probability >= t."""
    if not 0.0 < t < 1.0:
        raise ValueOutOfRange(f"threshold {t} outside (0, 1)")
    return (preds.probabilities >= t).astype(np.int64)


def _check_bits(pred: np.ndarray, truth: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    pred = np.atleast_2d(np.asarray(pred))
    truth = np.atleast_2d(np.asarray(truth))
    if pred.shape != truth.shape:
        raise ShapeMismatch(f"pred {pred.shape} vs truth {truth.shape}")
    return pred.astype(np.int64), truth.astype(np.int64)


def hamming_loss(pred: np.ndarray, truth: np.ndarray) -> float:
    """Fraction of label positions predicted incorrectly."""
    pred, truth = _check_bits(pred, truth)
    n, m = pred.shape
    return float(int((pred != truth).sum()) / (n * m))


def samples_prf(pred: np.ndarray, truth: np.ndarray) -> tuple[float, float, float]:
    """Samples-averaged precision, recall, and F1.

    Per sample: P = TP/(TP+FP), R = TP/(TP+FN), F1 their harmonic mean, then
    unweighted means over samples. Degenerate samples follow the declared
    conventions: both sets empty -> P = R = F1 = 1; any other zero denominator
    (or P + R = 0) -> 0 for the affected metric.
    """
    pred, truth = _check_bits(pred, truth)
    n = pred.shape[0]
    precisions = np.zeros(n)
    recalls = np.zeros(n)
    f1s = np.zeros(n)
    for i in range(n):
        tp = int((pred[i] & truth[i]).sum())
        n_pred = int(pred[i].sum())
        n_truth = int(truth[i].sum())
        if n_pred == 0 and n_truth == 0:
            precisions[i] = recalls[i] = f1s[i] = 1.0
            continue
        p = tp / n_pred if n_pred else 0.0
        r = tp / n_truth if n_truth else 0.0
        precisions[i] = p
        recalls[i] = r
        f1s[i] = 2.0 * p * r / (p + r) if p + r > 0.0 else 0.0
    return float(np.sum(precisions) / n), float(np.sum(recalls) / n), float(np.sum(f1s) / n)


def top_k_indices(probabilities: np.ndarray, k: int) -> np.ndarray:
    """Indices of the k most probable labels, ascending-index tie-break."""
    order = np.argsort(-probabilities, kind="stable")
    return order[:k]


def gtd_score(
    preds: PredictionSet,
    gt_indices: list[int],
    threshold: float | None = None,
    top_k: int | None = None,
) -> float:
    """Fraction of samples whose ground-truth disease is in the differential.

    Exactly one of ``threshold`` and ``top_k`` selects the decoding mode:
    threshold mode counts a hit when the ground-truth probability is >= t,
    top-k mode when the ground truth ranks among the k most probable labels.
    """
    if (threshold is None) == (top_k is None):
        raise errors.DdxkitError("pass exactly one of threshold / top_k")
    n, m = preds.probabilities.shape
    if len(gt_indices) != n:
        raise ShapeMismatch(f"{len(gt_indices)} ground-truth indices vs {n} samples")
    for gt in gt_indices:
        if not 0 <= gt < m:
            raise IndexOutOfRange(f"ground-truth index {gt} outside 0..{m - 1}")
    if n == 0:
        return 0.0

    hits = 0
    if threshold is not None:
        if not 0.0 < threshold < 1.0:
            raise ValueOutOfRange(f"threshold {threshold} outside (0, 1)")
        for i, gt in enumerate(gt_indices):
            if preds.probabilities[i, gt] >= threshold:
                hits += 1
    else:
        if not 1 <= top_k <= m:
            raise IndexOutOfRange(f"top_k {top_k} outside 1..{m}")
        for i, gt in enumerate(gt_indices):
            if gt in top_k_indices(preds.probabilities[i], top_k):
                hits += 1
    return hits / n
