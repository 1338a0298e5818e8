"""Training-data modification: sequence paraphrasing and term diversification."""

from .paraphrase import (
    NEGATION_WORDS,
    Paraphraser,
    RemoteParaphraser,
    RuleBasedParaphraser,
    check_contract,
    paraphrase_sentence,
    select_sentences,
)
from .pipeline import augment_corpus
from .plan import AugmentPlan, partition_for_augment
from .terms import TermMap, apply_mtd, load_term_map

__all__ = [
    "AugmentPlan",
    "NEGATION_WORDS",
    "Paraphraser",
    "RemoteParaphraser",
    "RuleBasedParaphraser",
    "TermMap",
    "apply_mtd",
    "augment_corpus",
    "check_contract",
    "load_term_map",
    "paraphrase_sentence",
    "partition_for_augment",
    "select_sentences",
]
