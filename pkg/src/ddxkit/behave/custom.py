"""Custom test-set ingestion.

Custom samples are narrative paragraphs (third person) with a ground-truth
differential. File format is JSONL: {"id", "text", "labels", "gt_index"};
labels may be a bit vector of length M or a list of condition codes, and
gt_index may be an integer or a condition code.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from ..corpus.catalogs import ConditionDescriptor
from ..errors import MalformedSample, UnknownCondition
from ..jsonutil import read_jsonl


@dataclass(frozen=True)
class CustomSample:
    id: str
    narrative_text: str
    labels: tuple[int, ...]
    ground_truth_index: int

    def to_row(self) -> dict:
        return {
            "id": self.id,
            "text": self.narrative_text,
            "labels": list(self.labels),
            "gt_index": self.ground_truth_index,
        }


def _resolve_labels(raw, conditions: list[ConditionDescriptor], where: str) -> tuple[int, ...]:
    m = len(conditions)
    if all(isinstance(v, int) for v in raw):
        if set(raw) <= {0, 1} and len(raw) == m:
            return tuple(raw)
        raise MalformedSample(
            f"{where}: labels must be a 0/1 vector of length {m}, got {raw!r}"
        )
    index = {c.code: c.label_index for c in conditions}
    labels = [0] * m
    for code in raw:
        if code not in index:
            raise UnknownCondition(f"{where}: unknown condition {code!r}")
        labels[index[code]] = 1
    return tuple(labels)


def load_custom_testset(
    path: str | Path, conditions: list[ConditionDescriptor]
) -> list[CustomSample]:
    index = {c.code: c.label_index for c in conditions}
    samples: list[CustomSample] = []
    seen: set[str] = set()
    for i, row in enumerate(read_jsonl(path)):
        where = f"{Path(path).name}:line {i + 1}"
        for key in ("id", "text", "labels", "gt_index"):
            if key not in row:
                raise MalformedSample(f"{where}: missing field {key!r}")
        if not isinstance(row["text"], str) or not row["text"].strip():
            raise MalformedSample(f"{where}: empty narrative text")
        if row["id"] in seen:
            raise MalformedSample(f"{where}: duplicate sample id {row['id']!r}")
        seen.add(row["id"])
        labels = _resolve_labels(row["labels"], conditions, where)
        if sum(labels) == 0:
            raise MalformedSample(f"{where}: label vector has no positive label")
        gt = row["gt_index"]
        if isinstance(gt, str):
            if gt not in index:
                raise UnknownCondition(f"{where}: unknown ground-truth condition {gt!r}")
            gt = index[gt]
        if not 0 <= gt < len(conditions):
            raise MalformedSample(f"{where}: gt_index {gt} outside 0..{len(conditions) - 1}")
        if labels[gt] != 1:
            raise MalformedSample(f"{where}: ground-truth label bit is not set")
        samples.append(
            CustomSample(
                id=str(row["id"]),
                narrative_text=row["text"],
                labels=labels,
                ground_truth_index=gt,
            )
        )
    return samples


def per_pathology_counts(
    samples: list[CustomSample], conditions: list[ConditionDescriptor]
) -> dict[str, int]:
    """Sample count per ground-truth pathology (the paper's >= 2 check)."""
    by_index = {c.label_index: c.code for c in conditions}
    counts = Counter(by_index[s.ground_truth_index] for s in samples)
    return dict(sorted(counts.items()))
