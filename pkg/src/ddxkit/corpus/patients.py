"""Patient record ingestion from DDXPlus-format CSV files.

Expected columns: AGE, SEX, PATHOLOGY, EVIDENCES, INITIAL_EVIDENCE,
DIFFERENTIAL_DIAGNOSIS. EVIDENCES holds a Python-literal list of strings,
either a bare binary code (``"E_55"``) or ``"CODE_@_VALUE"`` for categorical
and multichoice answers. DIFFERENTIAL_DIAGNOSIS holds a Python-literal list of
``[condition, probability]`` pairs.
"""

from __future__ import annotations

import ast
import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from ..errors import (
    EmptyDifferential,
    MalformedCatalog,
    MissingFile,
    UnknownEvidenceCode,
    ValueOutOfDomain,
)
from .catalogs import ConditionDescriptor, EvidenceDescriptor, EvidenceKind

_REQUIRED_COLUMNS = {"AGE", "SEX", "PATHOLOGY", "EVIDENCES", "DIFFERENTIAL_DIAGNOSIS"}

_SEX_NAMES = {"M": "male", "F": "female", "male": "male", "female": "female"}


@dataclass(frozen=True)
class PatientRecord:
    id: str
    age: int
    sex: str  # "male" | "female"
    ground_truth_pathology: str
    evidences: tuple[tuple[str, str], ...]  # (evidence code, value)
    differential: tuple[tuple[str, float], ...]  # (condition code, probability)


def _parse_literal(text: str, what: str, where: str):
    try:
        return ast.literal_eval(text)
    except (ValueError, SyntaxError) as exc:
        raise MalformedCatalog(f"{where}: cannot parse {what}: {exc}") from exc


def parse_evidence_item(item: str) -> tuple[str, str]:
    """Split a raw evidence string into (code, value); binary items get ''."""
    if "_@_" in item:
        code, value = item.split("_@_", 1)
        return code, value
    return item, ""


def _validate_evidence(
    code: str, value: str, by_code: dict[str, EvidenceDescriptor], where: str
) -> tuple[str, str]:
    desc = by_code.get(code)
    if desc is None:
        raise UnknownEvidenceCode(f"{where}: unknown evidence code {code!r}")
    if desc.kind is EvidenceKind.BINARY:
        # binary evidences carry an implicit affirmative; a stray value is invalid
        if value:
            raise ValueOutOfDomain(
                f"{where}: binary evidence {code!r} carries a value {value!r}"
            )
        return code, ""
    if value not in desc.value_domain:
        raise ValueOutOfDomain(
            f"{where}: value {value!r} not in domain of evidence {code!r}"
        )
    return code, value


def record_from_row(
    row: dict[str, str],
    record_id: str,
    by_code: dict[str, EvidenceDescriptor],
    condition_codes: set[str],
    where: str,
) -> PatientRecord:
    age = int(float(row["AGE"]))
    if age < 0:
        raise MalformedCatalog(f"{where}: negative age {age}")
    sex = _SEX_NAMES.get(row["SEX"])
    if sex is None:
        raise MalformedCatalog(f"{where}: unknown sex {row['SEX']!r}")

    raw_evidences = _parse_literal(row["EVIDENCES"], "EVIDENCES", where)
    evidences = tuple(
        _validate_evidence(*parse_evidence_item(str(item)), by_code, where)
        for item in raw_evidences
    )

    raw_diff = _parse_literal(row["DIFFERENTIAL_DIAGNOSIS"], "DIFFERENTIAL_DIAGNOSIS", where)
    if not raw_diff:
        raise EmptyDifferential(f"{where}: empty differential")
    differential: list[tuple[str, float]] = []
    seen: set[str] = set()
    for pair in raw_diff:
        name, prob = str(pair[0]), float(pair[1])
        if name not in condition_codes:
            raise MalformedCatalog(f"{where}: differential names unknown condition {name!r}")
        if name in seen:
            raise MalformedCatalog(f"{where}: condition {name!r} repeated in differential")
        if not 0.0 <= prob <= 1.0:
            raise ValueOutOfDomain(f"{where}: differential probability {prob} outside [0,1]")
        seen.add(name)
        differential.append((name, prob))

    pathology = row["PATHOLOGY"]
    if pathology not in condition_codes:
        raise MalformedCatalog(f"{where}: unknown pathology {pathology!r}")

    return PatientRecord(
        id=record_id,
        age=age,
        sex=sex,
        ground_truth_pathology=pathology,
        evidences=evidences,
        differential=tuple(differential),
    )


def load_patients(
    path: str | Path,
    catalogs: tuple[Iterable[EvidenceDescriptor], Iterable[ConditionDescriptor]],
    id_prefix: str = "p",
) -> list[PatientRecord]:
    """Load and validate one patients CSV; ids are ``{prefix}-{row:07d}``."""
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"patients file not found: {path}")
    evidences, conditions = catalogs
    by_code = {e.code: e for e in evidences}
    condition_codes = {c.code for c in conditions}

    records: list[PatientRecord] = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = _REQUIRED_COLUMNS - set(reader.fieldnames or [])
        if missing:
            raise MalformedCatalog(f"{path}: missing columns {sorted(missing)}")
        for i, row in enumerate(reader):
            where = f"{path.name}:row {i}"
            records.append(
                record_from_row(row, f"{id_prefix}-{i:07d}", by_code, condition_codes, where)
            )
    return records


def export_patients(path: str | Path, records: Iterable[PatientRecord]) -> None:
    """Write records back to the tabular format (inverse of load_patients)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            ["AGE", "SEX", "PATHOLOGY", "EVIDENCES", "INITIAL_EVIDENCE", "DIFFERENTIAL_DIAGNOSIS"]
        )
        for rec in records:
            raw_evidences = [
                code if not value else f"{code}_@_{value}" for code, value in rec.evidences
            ]
            raw_diff = [[code, prob] for code, prob in rec.differential]
            writer.writerow(
                [
                    rec.age,
                    "M" if rec.sex == "male" else "F",
                    rec.ground_truth_pathology,
                    repr(raw_evidences),
                    raw_evidences[0].split("_@_")[0] if raw_evidences else "",
                    repr(raw_diff),
                ]
            )
