"""Inference over trained head parameters."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ShapeMismatch
from .encoder import DEFAULT_DIM, HASH_SALT, encode_batch
from .head import HeadParams, head_forward
from .loss import logits_from_probabilities, probabilities_from_logits


@dataclass
class PredictionSet:
    ids: list[str]
    logits: np.ndarray  # (N, M)
    probabilities: np.ndarray  # (N, M), clipped sigmoid of logits

    def __post_init__(self) -> None:
        if self.logits.shape != self.probabilities.shape:
            raise ShapeMismatch(
                f"logits {self.logits.shape} vs probabilities {self.probabilities.shape}"
            )
        if len(self.ids) != self.logits.shape[0]:
            raise ShapeMismatch(
                f"{len(self.ids)} ids vs {self.logits.shape[0]} prediction rows"
            )

    @property
    def n_labels(self) -> int:
        return self.logits.shape[1]

    @classmethod
    def from_logits(cls, ids: list[str], logits: np.ndarray) -> "PredictionSet":
        logits = np.asarray(logits, dtype=np.float64)
        return cls(ids=list(ids), logits=logits, probabilities=probabilities_from_logits(logits))

    @classmethod
    def from_probabilities(cls, ids: list[str], probs: np.ndarray) -> "PredictionSet":
        logits = logits_from_probabilities(probs)
        return cls(ids=list(ids), logits=logits, probabilities=probabilities_from_logits(logits))

    def to_rows(self):
        for i, sample_id in enumerate(self.ids):
            yield {"id": sample_id, "logits": [float(v) for v in self.logits[i]]}


def predict(
    texts: list[str],
    params: HeadParams,
    dim: int = DEFAULT_DIM,
    salt: int = HASH_SALT,
    ids: list[str] | None = None,
) -> PredictionSet:
    """Pure function of (texts, params): logits and probabilities per sample."""
    if ids is None:
        ids = [f"s{i:06d}" for i in range(len(texts))]
    if len(ids) != len(texts):
        raise ShapeMismatch(f"{len(ids)} ids vs {len(texts)} texts")
    X = encode_batch(texts, dim, salt)
    # row-at-a-time keeps batch output bit-identical to one-by-one calls
    logits = np.zeros((len(texts), params.n_labels))
    for i in range(len(texts)):
        logits[i] = head_forward(X[i : i + 1], params)[0]
    return PredictionSet.from_logits(ids, logits)
