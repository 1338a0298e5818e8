"""Behavioral test-set generators: typos, history exclusion, custom sets."""

from .custom import CustomSample, load_custom_testset, per_pathology_counts
from .exclusion import ExclusionConfig, exclude_history, exclude_history_corpus
from .typos import (
    QWERTY_NEIGHBORS,
    TypoConfig,
    TypoKind,
    apply_typo,
    insert_typos,
    insert_typos_corpus,
)

__all__ = [
    "CustomSample",
    "ExclusionConfig",
    "QWERTY_NEIGHBORS",
    "TypoConfig",
    "TypoKind",
    "apply_typo",
    "exclude_history",
    "exclude_history_corpus",
    "insert_typos",
    "insert_typos_corpus",
    "load_custom_testset",
    "per_pathology_counts",
]
