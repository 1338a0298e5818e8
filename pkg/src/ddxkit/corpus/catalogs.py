"""Evidence and condition catalogs.

The catalogs ship as JSON in the DDXPlus release layout: a mapping (or list)
of entries, evidences keyed by code with ``question_en``, ``data_type``
(B/C/M), ``possible-values``, ``default_value`` and ``is_antecedent`` fields,
conditions keyed by name with ``condition_name`` / ``cond-name-eng``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path

from ..errors import DuplicateCode, MalformedCatalog, MissingFile
from ..jsonutil import read_json


class EvidenceKind(enum.Enum):
    BINARY = "binary"
    CATEGORICAL = "categorical"
    MULTICHOICE = "multichoice"


_DATA_TYPE_TO_KIND = {
    "B": EvidenceKind.BINARY,
    "C": EvidenceKind.CATEGORICAL,
    "M": EvidenceKind.MULTICHOICE,
    "binary": EvidenceKind.BINARY,
    "categorical": EvidenceKind.CATEGORICAL,
    "multichoice": EvidenceKind.MULTICHOICE,
}


@dataclass(frozen=True)
class EvidenceDescriptor:
    code: str
    question_text: str
    kind: EvidenceKind
    value_domain: tuple[str, ...]
    default_value: str
    is_antecedent: bool


@dataclass(frozen=True)
class ConditionDescriptor:
    code: str
    display_name: str
    label_index: int


def _entries(raw, path: Path) -> list[dict]:
    if isinstance(raw, dict):
        return list(raw.values())
    if isinstance(raw, list):
        return raw
    raise MalformedCatalog(f"{path}: expected a JSON object or array at top level")


def load_evidences(path: str | Path) -> list[EvidenceDescriptor]:
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"evidence catalog not found: {path}")
    raw = read_json(path)
    evidences: list[EvidenceDescriptor] = []
    seen: set[str] = set()
    for i, entry in enumerate(_entries(raw, path)):
        if not isinstance(entry, dict):
            raise MalformedCatalog(f"{path}: entry {i} is not an object")
        code = entry.get("name") or entry.get("code")
        if not code:
            raise MalformedCatalog(f"{path}: entry {i} has no 'name'/'code' field")
        if code in seen:
            raise DuplicateCode(f"{path}: duplicate evidence code {code!r}")
        seen.add(code)
        data_type = entry.get("data_type", "B")
        kind = _DATA_TYPE_TO_KIND.get(data_type)
        if kind is None:
            raise MalformedCatalog(
                f"{path}: evidence {code!r} has unknown data_type {data_type!r}"
            )
        domain = tuple(str(v) for v in entry.get("possible-values", entry.get("value_domain", [])))
        if kind is not EvidenceKind.BINARY and not domain:
            raise MalformedCatalog(
                f"{path}: {kind.value} evidence {code!r} has an empty value domain"
            )
        question = entry.get("question_en", entry.get("question_text", ""))
        if not question:
            raise MalformedCatalog(f"{path}: evidence {code!r} has no question text")
        evidences.append(
            EvidenceDescriptor(
                code=code,
                question_text=question,
                kind=kind,
                value_domain=domain if kind is not EvidenceKind.BINARY else (),
                default_value=str(entry.get("default_value", "")),
                is_antecedent=bool(entry.get("is_antecedent", False)),
            )
        )
    if not evidences:
        raise MalformedCatalog(f"{path}: catalog is empty")
    return evidences


def load_conditions(path: str | Path) -> list[ConditionDescriptor]:
    """Load the condition catalog; label_index is assigned by ascending code."""
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"condition catalog not found: {path}")
    raw = read_json(path)
    names: list[tuple[str, str]] = []
    seen: set[str] = set()
    for i, entry in enumerate(_entries(raw, path)):
        if not isinstance(entry, dict):
            raise MalformedCatalog(f"{path}: entry {i} is not an object")
        code = entry.get("condition_name") or entry.get("code")
        if not code:
            raise MalformedCatalog(f"{path}: entry {i} has no 'condition_name'/'code' field")
        if code in seen:
            raise DuplicateCode(f"{path}: duplicate condition code {code!r}")
        seen.add(code)
        display = entry.get("cond-name-eng") or entry.get("display_name") or code
        names.append((code, display))
    if not names:
        raise MalformedCatalog(f"{path}: catalog is empty")
    names.sort(key=lambda pair: pair[0])
    return [
        ConditionDescriptor(code=code, display_name=display, label_index=idx)
        for idx, (code, display) in enumerate(names)
    ]


def load_catalogs(
    evidence_path: str | Path, condition_path: str | Path
) -> tuple[list[EvidenceDescriptor], list[ConditionDescriptor]]:
    return load_evidences(evidence_path), load_conditions(condition_path)


def condition_index(conditions: list[ConditionDescriptor]) -> dict[str, ConditionDescriptor]:
    return {c.code: c for c in conditions}


def evidence_index(evidences: list[EvidenceDescriptor]) -> dict[str, EvidenceDescriptor]:
    return {e.code: e for e in evidences}
