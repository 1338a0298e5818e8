"""Score externally produced predictions (e.g. transformer runs) with ddxkit.

Rows are JSONL, one per sample: {"id": ..., "logits": [...]} or
{"id": ..., "probs": [...]}. Probabilities are converted through the logistic
inverse so the resulting PredictionSet behaves exactly like an internal one.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..errors import LengthMismatch, MalformedSample, UnknownSampleId, ValueOutOfRange
from ..jsonutil import read_jsonl, write_jsonl
from .predict import PredictionSet


def import_external_predictions(path: str | Path, corpus) -> PredictionSet:
    """Join prediction rows to the corpus by sample id (corpus order kept).

    ``corpus`` is any sequence of samples with ``id`` and ``labels``; every row
    id must exist in the corpus and carry exactly M values.
    """
    m = len(corpus[0].labels)
    known = {sample.id for sample in corpus}
    rows: dict[str, tuple[str, list[float]]] = {}
    for i, row in enumerate(read_jsonl(path)):
        where = f"{Path(path).name}:line {i + 1}"
        sample_id = row.get("id")
        if sample_id is None:
            raise MalformedSample(f"{where}: missing 'id'")
        if sample_id not in known:
            raise UnknownSampleId(f"{where}: id {sample_id!r} not in corpus")
        if sample_id in rows:
            raise MalformedSample(f"{where}: duplicate id {sample_id!r}")
        if "logits" in row:
            kind, values = "logits", row["logits"]
        elif "probs" in row:
            kind, values = "probs", row["probs"]
        else:
            raise MalformedSample(f"{where}: row needs 'logits' or 'probs'")
        if len(values) != m:
            raise LengthMismatch(f"{where}: expected {m} values, got {len(values)}")
        if kind == "probs":
            for v in values:
                if not 0.0 <= float(v) <= 1.0:
                    raise ValueOutOfRange(f"{where}: probability {v} outside [0, 1]")
        rows[sample_id] = (kind, [float(v) for v in values])

    ids = [sample.id for sample in corpus if sample.id in rows]
    logit_rows = []
    prob_rows = []
    kinds = {kind for kind, _ in rows.values()}
    if kinds == {"logits"}:
        for sample_id in ids:
            logit_rows.append(rows[sample_id][1])
        return PredictionSet.from_logits(ids, np.array(logit_rows, dtype=np.float64))
    if kinds == {"probs"}:
        for sample_id in ids:
            prob_rows.append(rows[sample_id][1])
        return PredictionSet.from_probabilities(ids, np.array(prob_rows, dtype=np.float64))
    raise MalformedSample(f"{path}: rows mix 'logits' and 'probs'")


def export_predictions(path: str | Path, preds: PredictionSet) -> None:
    write_jsonl(path, preds.to_rows())
