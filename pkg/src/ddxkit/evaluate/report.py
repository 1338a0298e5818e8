"""Full evaluation runs producing machine-readable metrics reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import JoinFailure, ValueOutOfRange
from ..jsonutil import dumps_pretty
from ..model.predict import PredictionSet
from .metrics import binarize_predictions, gtd_score, hamming_loss, samples_prf


@dataclass(frozen=True)
class EvalConfig:
    t_conf: float = 0.5
    extra_thresholds: tuple[float, ...] = (0.2, 0.95)
    top_k: int = 5

    def validate(self, m_labels: int) -> None:
        for t in (self.t_conf, *self.extra_thresholds):
            if not 0.0 < t < 1.0:
                raise ValueOutOfRange(f"threshold {t} outside (0, 1)")
        if not 1 <= self.top_k <= m_labels:
            raise ValueOutOfRange(f"top_k {self.top_k} outside 1..{m_labels}")


@dataclass
class MetricsReport:
    hamming_loss: float
    precision: float
    recall: float
    f1: float
    gtd: dict[str, float]  # threshold (as string) -> score
    gtd_top_k: float
    top_k: int
    t_conf: float
    n_samples: int
    m_labels: int
    provenance: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "hamming_loss": self.hamming_loss,
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "gtd": self.gtd,
            "gtd_top_k": self.gtd_top_k,
            "top_k": self.top_k,
            "t_conf": self.t_conf,
            "n_samples": self.n_samples,
            "m_labels": self.m_labels,
            "provenance": self.provenance,
        }


def _threshold_key(t: float) -> str:
    return format(t, "g")


def evaluate_run(preds: PredictionSet, corpus, config: EvalConfig) -> MetricsReport:
    """Score a prediction set against a corpus.

    ``corpus`` is a sequence of samples with ``id``, ``labels`` and
    ``ground_truth_index``. Predictions must cover the corpus exactly (same
    ids); order follows the corpus.
    """
    corpus_ids = [sample.id for sample in corpus]
    if corpus_ids != list(preds.ids):
        missing = set(corpus_ids) - set(preds.ids)
        extra = set(preds.ids) - set(corpus_ids)
        if missing or extra:
            raise JoinFailure(
                f"predictions do not match corpus: {len(missing)} missing, "
                f"{len(extra)} unknown sample ids"
            )
        # same ids, different order: realign
        pos = {sample_id: i for i, sample_id in enumerate(preds.ids)}
        order = [pos[sample_id] for sample_id in corpus_ids]
        preds = PredictionSet(
            ids=corpus_ids,
            logits=preds.logits[order],
            probabilities=preds.probabilities[order],
        )

    truth = np.array([sample.labels for sample in corpus], dtype=np.int64)
    gt_indices = [sample.ground_truth_index for sample in corpus]
    m = truth.shape[1]
    config.validate(m)

    decoded = binarize_predictions(preds, config.t_conf)
    precision, recall, f1 = samples_prf(decoded, truth)
    gtd: dict[str, float] = {}
    for t in sorted({config.t_conf, *config.extra_thresholds}):
        gtd[_threshold_key(t)] = gtd_score(preds, gt_indices, threshold=t)

    return MetricsReport(
        hamming_loss=hamming_loss(decoded, truth),
        precision=precision,
        recall=recall,
        f1=f1,
        gtd=gtd,
        gtd_top_k=gtd_score(preds, gt_indices, top_k=config.top_k),
        top_k=config.top_k,
        t_conf=config.t_conf,
        n_samples=len(corpus_ids),
        m_labels=m,
    )


def write_metrics_report(path: str | Path, report: MetricsReport) -> None:
    """Byte-stable JSON (sorted keys, no timestamps)."""
    Path(path).write_text(dumps_pretty(report.to_dict()) + "\n", encoding="utf-8")
