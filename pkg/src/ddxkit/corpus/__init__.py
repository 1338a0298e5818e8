"""Tabular patient data ingestion and patient-report synthesis."""

from .catalogs import (
    ConditionDescriptor,
    EvidenceDescriptor,
    EvidenceKind,
    load_catalogs,
    load_conditions,
    load_evidences,
)
from .patients import PatientRecord, load_patients
from .reports import (
    PatientReport,
    binarize_differential,
    read_corpus,
    read_scored_samples,
    write_corpus,
)
from .splits import DatasetSplit, build_splits
from .templates import ResponseTemplate, derive_templates, load_templates, render_report

__all__ = [
    "ConditionDescriptor",
    "DatasetSplit",
    "EvidenceDescriptor",
    "EvidenceKind",
    "PatientRecord",
    "PatientReport",
    "ResponseTemplate",
    "binarize_differential",
    "build_splits",
    "derive_templates",
    "load_catalogs",
    "load_conditions",
    "load_evidences",
    "load_patients",
    "load_templates",
    "read_corpus",
    "read_scored_samples",
    "render_report",
    "write_corpus",
]
