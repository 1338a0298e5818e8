"""Patient reports, label binarization, and corpus JSONL round-tripping."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from ..errors import EmptyDifferential, MalformedCatalog
from ..jsonutil import dumps, read_jsonl
from .catalogs import ConditionDescriptor
from .patients import PatientRecord


@dataclass
class PatientReport:
    id: str
    header: str  # "Age: N. Sex: S."
    history_sentences: list[str] = field(default_factory=list)
    symptom_sentences: list[str] = field(default_factory=list)
    labels: list[int] = field(default_factory=list)
    ground_truth_index: int = 0

    @property
    def sentences(self) -> list[str]:
        """Pooled sentences, history first (the N the paper selects over)."""
        return self.history_sentences + self.symptom_sentences

    @property
    def text(self) -> str:
        parts = [self.header, *self.history_sentences, *self.symptom_sentences]
        return " ".join(p for p in parts if p)

    def copy(self) -> "PatientReport":
        return PatientReport(
            id=self.id,
            header=self.header,
            history_sentences=list(self.history_sentences),
            symptom_sentences=list(self.symptom_sentences),
            labels=list(self.labels),
            ground_truth_index=self.ground_truth_index,
        )

    def to_row(self) -> dict:
        return {
            "id": self.id,
            "header": self.header,
            "history": self.history_sentences,
            "symptoms": self.symptom_sentences,
            "labels": self.labels,
            "gt_index": self.ground_truth_index,
        }

    @classmethod
    def from_row(cls, row: dict) -> "PatientReport":
        return cls(
            id=row["id"],
            header=row["header"],
            history_sentences=list(row["history"]),
            symptom_sentences=list(row["symptoms"]),
            labels=list(row["labels"]),
            ground_truth_index=row["gt_index"],
        )


def binarize_differential(
    record: PatientRecord, conditions: list[ConditionDescriptor]
) -> list[int]:
    """One-hot encode the differential: bit j set iff condition j is listed.

    Probabilities are discarded; membership alone decides the label.
    """
    if not record.differential:
        raise EmptyDifferential(f"record {record.id}: empty differential")
    index = {c.code: c.label_index for c in conditions}
    labels = [0] * len(conditions)
    for code, _prob in record.differential:
        try:
            labels[index[code]] = 1
        except KeyError:
            raise MalformedCatalog(
                f"record {record.id}: differential condition {code!r} not in catalog"
            ) from None
    return labels


def write_corpus(path: str | Path, reports: Iterable[PatientReport]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for report in reports:
            fh.write(dumps(report.to_row()))
            fh.write("\n")


def read_corpus(path: str | Path) -> list[PatientReport]:
    return [PatientReport.from_row(row) for row in read_jsonl(path)]


def iter_corpus(path: str | Path) -> Iterator[PatientReport]:
    for row in read_jsonl(path):
        yield PatientReport.from_row(row)


@dataclass(frozen=True)
class ScoredSample:
    """The minimum a sample needs to be predicted on and scored."""

    id: str
    text: str
    labels: tuple[int, ...]
    ground_truth_index: int


def read_scored_samples(path: str | Path) -> list[ScoredSample]:
    """Read either corpus rows or custom-test-set rows ({id, text, ...})."""
    samples: list[ScoredSample] = []
    for row in read_jsonl(path):
        if "text" in row:
            text = row["text"]
        else:
            text = PatientReport.from_row(row).text
        samples.append(
            ScoredSample(
                id=row["id"],
                text=text,
                labels=tuple(row["labels"]),
                ground_truth_index=row["gt_index"],
            )
        )
    return samples
