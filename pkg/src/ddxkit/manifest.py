"""Auditable edit manifests for augmentation and behavioral generators.

A manifest records every edit applied to a corpus, keyed by sample id, at the
granularity the generator worked at (sentence text for paraphrase/term swaps,
single words for typos, removed sentences for history exclusion). Replaying a
manifest against the unmodified corpus reproduces the modified corpus exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .corpus.reports import PatientReport
from .errors import DdxkitError
from .jsonutil import read_json, write_json

EDIT_KINDS = ("paraphrase", "term_swap", "typo", "history_exclusion")


@dataclass(frozen=True)
class Edit:
    sample_id: str
    edit_kind: str
    sentence_index: int  # pooled index, history before symptoms
    before: str
    after: str | None  # None marks a removed sentence
    word_index: int | None = None  # typo edits only
    detail: str | None = None  # e.g. the typo kind

    def to_row(self) -> dict:
        row = {
            "sample_id": self.sample_id,
            "edit_kind": self.edit_kind,
            "sentence_index": self.sentence_index,
            "before": self.before,
            "after": self.after,
        }
        if self.word_index is not None:
            row["word_index"] = self.word_index
        if self.detail is not None:
            row["detail"] = self.detail
        return row

    @classmethod
    def from_row(cls, row: dict) -> "Edit":
        return cls(
            sample_id=row["sample_id"],
            edit_kind=row["edit_kind"],
            sentence_index=row["sentence_index"],
            before=row["before"],
            after=row["after"],
            word_index=row.get("word_index"),
            detail=row.get("detail"),
        )


@dataclass
class PerturbationManifest:
    seed: int
    edits: list[Edit] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def extend(self, edits: Iterable[Edit]) -> None:
        self.edits.extend(edits)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "edits": [e.to_row() for e in self.edits],
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PerturbationManifest":
        return cls(
            seed=data["seed"],
            edits=[Edit.from_row(row) for row in data["edits"]],
            meta=data.get("meta", {}),
        )

    def save(self, path: str | Path) -> None:
        write_json(path, self.to_dict())

    @classmethod
    def load(cls, path: str | Path) -> "PerturbationManifest":
        return cls.from_dict(read_json(path))


def _word_spans(sentence: str) -> list[tuple[int, int]]:
    return [m.span() for m in re.finditer(r"\S+", sentence)]


def replace_word(sentence: str, word_index: int, before: str, after: str) -> str:
    spans = _word_spans(sentence)
    if word_index >= len(spans):
        raise DdxkitError(f"word index {word_index} out of range in {sentence!r}")
    start, end = spans[word_index]
    if sentence[start:end] != before:
        raise DdxkitError(
            f"manifest mismatch: expected word {before!r} at index {word_index}, "
            f"found {sentence[start:end]!r}"
        )
    return sentence[:start] + after + sentence[end:]


def replay(manifest: PerturbationManifest, reports: list[PatientReport]) -> list[PatientReport]:
    """Apply a manifest to the unmodified corpus; returns the modified corpus.

    Sentence indices in the manifest refer to the unmodified report, so typo
    word edits are applied before removals, and removals are applied in
    descending index order.
    """
    by_sample: dict[str, list[Edit]] = {}
    for edit in manifest.edits:
        by_sample.setdefault(edit.sample_id, []).append(edit)

    out: list[PatientReport] = []
    for report in reports:
        edits = by_sample.get(report.id)
        if not edits:
            out.append(report.copy())
            continue
        modified = report.copy()
        sentences = modified.sentences  # pooled copy
        n_history = len(modified.history_sentences)

        removals: list[Edit] = []
        for edit in edits:
            if edit.edit_kind == "history_exclusion":
                removals.append(edit)
                continue
            idx = edit.sentence_index
            if idx >= len(sentences):
                raise DdxkitError(f"{report.id}: sentence index {idx} out of range")
            if edit.edit_kind == "typo":
                sentences[idx] = replace_word(
                    sentences[idx], edit.word_index or 0, edit.before, edit.after or ""
                )
            else:  # paraphrase / term_swap carry full sentence text
                if sentences[idx] != edit.before:
                    raise DdxkitError(
                        f"{report.id}: manifest mismatch at sentence {idx}: "
                        f"expected {edit.before!r}, found {sentences[idx]!r}"
                    )
                sentences[idx] = edit.after or ""

        history = sentences[:n_history]
        symptoms = sentences[n_history:]
        for edit in sorted(removals, key=lambda e: e.sentence_index, reverse=True):
            idx = edit.sentence_index
            if idx >= len(history) or history[idx] != edit.before:
                raise DdxkitError(
                    f"{report.id}: manifest mismatch removing history sentence {idx}"
                )
            del history[idx]

        modified.history_sentences = history
        modified.symptom_sentences = symptoms
        out.append(modified)
    return out
