"""Response templates and patient-report rendering.

A template file is JSONL, one row per (evidence, value matcher):

    {"evidence_code": "E_1", "value_matcher": "*", "section": "symptom",
     "sentence_template": "I feel pain in my {value}."}

``value_matcher`` is an exact value or ``"*"``; exact matches win over the
wildcard. Sentences are first-person and must end with terminal punctuation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..errors import MalformedCatalog, NoTemplateMatch
from ..jsonutil import read_jsonl, write_jsonl
from .catalogs import ConditionDescriptor, EvidenceDescriptor, EvidenceKind
from .patients import PatientRecord
from .reports import PatientReport, binarize_differential

WILDCARD = "*"
_SECTIONS = ("history", "symptom")
_TERMINAL = (".", "!", "?")


@dataclass(frozen=True)
class ResponseTemplate:
    evidence_code: str
    value_matcher: str  # exact value or "*"
    sentence_template: str  # may contain one {value} placeholder
    section: str  # "history" | "symptom"


def load_templates(path: str | Path) -> list[ResponseTemplate]:
    templates: list[ResponseTemplate] = []
    for i, row in enumerate(read_jsonl(path)):
        try:
            tpl = ResponseTemplate(
                evidence_code=row["evidence_code"],
                value_matcher=row.get("value_matcher", WILDCARD),
                sentence_template=row["sentence_template"],
                section=row["section"],
            )
        except KeyError as exc:
            raise MalformedCatalog(f"{path}: template row {i} missing field {exc}") from exc
        if tpl.section not in _SECTIONS:
            raise MalformedCatalog(f"{path}: template row {i} has bad section {tpl.section!r}")
        if not tpl.sentence_template or not tpl.sentence_template.endswith(_TERMINAL):
            raise MalformedCatalog(
                f"{path}: template row {i} must be a non-empty sentence "
                f"ending with terminal punctuation"
            )
        templates.append(tpl)
    if not templates:
        raise MalformedCatalog(f"{path}: no templates")
    return templates


def save_templates(path: str | Path, templates: Iterable[ResponseTemplate]) -> None:
    write_jsonl(
        path,
        (
            {
                "evidence_code": t.evidence_code,
                "value_matcher": t.value_matcher,
                "section": t.section,
                "sentence_template": t.sentence_template,
            }
            for t in templates
        ),
    )


def validate_coverage(
    templates: Iterable[ResponseTemplate], evidences: Iterable[EvidenceDescriptor]
) -> None:
    """Every catalog evidence needs at least one matching template."""
    covered = {t.evidence_code for t in templates}
    missing = [e.code for e in evidences if e.code not in covered]
    if missing:
        raise MalformedCatalog(
            f"no template for {len(missing)} evidence(s), e.g. {missing[:5]}"
        )


def _match(templates: list[ResponseTemplate], code: str, value: str) -> ResponseTemplate:
    wildcard = None
    for tpl in templates:
        if tpl.evidence_code != code:
            continue
        if tpl.value_matcher == value:
            return tpl
        if tpl.value_matcher == WILDCARD and wildcard is None:
            wildcard = tpl
    if wildcard is None:
        raise NoTemplateMatch(code, value)
    return wildcard


def render_report(
    record: PatientRecord,
    templates: list[ResponseTemplate],
    evidences: list[EvidenceDescriptor],
    conditions: list[ConditionDescriptor],
) -> PatientReport:
    """Synthesize the first-person patient report for one record.

    Sentences follow catalog order within each section, history first; the
    same record and templates always produce a byte-identical report.
    """
    order = {e.code: i for i, e in enumerate(evidences)}
    occurrences = sorted(
        enumerate(record.evidences), key=lambda item: (order[item[1][0]], item[0])
    )

    history: list[str] = []
    symptoms: list[str] = []
    for _, (code, value) in occurrences:
        tpl = _match(templates, code, value)
        sentence = tpl.sentence_template.replace("{value}", value)
        if not sentence or not sentence.endswith(_TERMINAL):
            raise MalformedCatalog(
                f"template for {code!r} rendered a malformed sentence: {sentence!r}"
            )
        (history if tpl.section == "history" else symptoms).append(sentence)

    labels = binarize_differential(record, conditions)
    gt_index = next(
        c.label_index for c in conditions if c.code == record.ground_truth_pathology
    )
    if labels[gt_index] != 1:
        raise MalformedCatalog(
            f"record {record.id}: differential does not contain the ground-truth "
            f"pathology {record.ground_truth_pathology!r}"
        )
    return PatientReport(
        id=record.id,
        header=f"Age: {record.age}. Sex: {record.sex}.",
        history_sentences=history,
        symptom_sentences=symptoms,
        labels=labels,
        ground_truth_index=gt_index,
    )


# --- template derivation -------------------------------------------------------

_QUESTION_REWRITES = [
    (re.compile(r"^do you have (.+)$", re.I), "I have {rest}."),
    (re.compile(r"^do you feel (.+)$", re.I), "I feel {rest}."),
    (re.compile(r"^do you (.+)$", re.I), "I {rest}."),
    (re.compile(r"^are you (.+)$", re.I), "I am {rest}."),
    (re.compile(r"^have you (.+)$", re.I), "I have {rest}."),
    (re.compile(r"^did you (.+)$", re.I), "I did {rest}."),
    (re.compile(r"^is your (.+)$", re.I), "My {rest}."),
]


def _first_person(question: str) -> str | None:
    q = question.strip().rstrip("?").strip()
    for pattern, shape in _QUESTION_REWRITES:
        m = pattern.match(q)
        if m:
            rest = m.group(1).replace(" your ", " my ").replace("Your ", "My ")
            return shape.format(rest=rest)
    return None


def derive_templates(
    evidences: list[EvidenceDescriptor],
    value_meanings: dict[str, dict[str, str]] | None = None,
) -> list[ResponseTemplate]:
    """Bootstrap a template file from catalog question text.

    The output is a starting point meant to be hand-edited: binary questions
    get a first-person rewrite where a pattern applies, everything else falls
    back to quoting the question. ``value_meanings`` optionally maps evidence
    code -> raw value -> display text and yields per-value templates.
    """
    templates: list[ResponseTemplate] = []
    for ev in evidences:
        section = "history" if ev.is_antecedent else "symptom"
        if ev.kind is EvidenceKind.BINARY:
            sentence = _first_person(ev.question_text)
            if sentence is None:
                q = ev.question_text.strip().rstrip("?")
                sentence = f'To the question "{q}", my answer is yes.'
            templates.append(ResponseTemplate(ev.code, WILDCARD, sentence, section))
            continue
        meanings = (value_meanings or {}).get(ev.code, {})
        for value in ev.value_domain:
            display = meanings.get(value)
            if display is not None:
                q = ev.question_text.strip().rstrip("?")
                templates.append(
                    ResponseTemplate(
                        ev.code, value, f'To the question "{q}", my answer is {display}.', section
                    )
                )
        q = ev.question_text.strip().rstrip("?")
        templates.append(
            ResponseTemplate(
                ev.code, WILDCARD, f'To the question "{q}", my answer is {{value}}.', section
            )
        )
    return templates
