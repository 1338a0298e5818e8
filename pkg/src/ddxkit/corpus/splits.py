"""Balanced split construction.

Each official split file is sampled independently: per pathology, draw
min(target, available) records uniformly without replacement. Shortfall below
the target is expected (some pathologies are rare) and recorded in the counts,
never raised.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..rng import derive_rng
from .catalogs import ConditionDescriptor, EvidenceDescriptor
from .patients import PatientRecord
from .reports import PatientReport
from .templates import ResponseTemplate, render_report

SPLIT_NAMES = ("train", "validation", "test")


@dataclass
class DatasetSplit:
    name: str  # "train" | "validation" | "test"
    reports: list[PatientReport]
    per_pathology_counts: dict[str, int]
    seed: int


def sample_balanced(
    records: list[PatientRecord], target: int, seed: int, split_name: str
) -> tuple[list[PatientRecord], dict[str, int]]:
    """Sample min(target, available) records per pathology, file order kept."""
    groups: dict[str, list[int]] = {}
    for i, rec in enumerate(records):
        groups.setdefault(rec.ground_truth_pathology, []).append(i)

    chosen: list[int] = []
    counts: dict[str, int] = {}
    for pathology in sorted(groups):
        indices = groups[pathology]
        k = min(target, len(indices))
        rng = derive_rng(seed, "split", split_name, pathology)
        picked = rng.choice(len(indices), size=k, replace=False)
        chosen.extend(indices[j] for j in picked)
        counts[pathology] = k
    chosen.sort()
    return [records[i] for i in chosen], counts


def build_splits(
    patients_by_split: dict[str, list[PatientRecord]],
    target_per_pathology: dict[str, int],
    seed: int,
    templates: list[ResponseTemplate],
    evidences: list[EvidenceDescriptor],
    conditions: list[ConditionDescriptor],
) -> list[DatasetSplit]:
    """Balanced-sample each official split and render its patient reports.

    ``patients_by_split`` must come from the official per-split files; this
    function never re-partitions records between splits.
    """
    splits: list[DatasetSplit] = []
    for name in SPLIT_NAMES:
        records = patients_by_split.get(name, [])
        sampled, counts = sample_balanced(records, target_per_pathology[name], seed, name)
        reports = [render_report(rec, templates, evidences, conditions) for rec in sampled]
        splits.append(
            DatasetSplit(name=name, reports=reports, per_pathology_counts=counts, seed=seed)
        )
    return splits
