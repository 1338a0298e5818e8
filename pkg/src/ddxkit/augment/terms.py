"""Medical term diversification (MTD).

The term map is a flat JSON object, canonical term -> 1..4 related terms, all
lowercase. Matching is case-insensitive on whole words, longest canonical term
first, leftmost span winning ties; every occurrence in a sample is replaced.
"""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path

import numpy as np

from ..corpus.reports import PatientReport
from ..errors import MalformedCatalog
from ..jsonutil import read_json
from ..manifest import Edit
from ..rng import derive_rng

# terms may contain "(r)"-style markers, so \b is not enough
_BOUNDARY_L = r"(?<![a-z0-9])"
_BOUNDARY_R = r"(?![a-z0-9])"


def _compile(terms) -> re.Pattern:
    ordered = sorted(terms, key=lambda t: (-len(t), t))
    alternation = "|".join(re.escape(term) for term in ordered)
    return re.compile(_BOUNDARY_L + "(?:" + alternation + ")" + _BOUNDARY_R, re.IGNORECASE)


class TermMap:
    """Canonical -> related terms, with whole-word matchers precompiled."""

    def __init__(self, entries: dict[str, list[str]]):
        self.entries = entries
        self.canonical_pattern = _compile(entries)
        self._class_of: dict[str, frozenset[str]] = {}
        for canonical, related in entries.items():
            group = frozenset({canonical, *related})
            self._class_of[canonical] = group
            for term in related:
                self._class_of.setdefault(term, group)
        self.all_terms = frozenset(self._class_of)
        self._all_pattern = _compile(self.all_terms)

    def __len__(self) -> int:
        return len(self.entries)

    def equivalence_class(self, term: str) -> frozenset[str]:
        """The canonical term plus its related terms, for any member."""
        term = term.lower()
        return self._class_of.get(term, frozenset({term}))

    def find_terms(self, text: str) -> set[str]:
        """All mapped terms (canonical or related) present in ``text``."""
        return {m.group(0).lower() for m in self._all_pattern.finditer(text)}

    def contains_term(self, text: str, term: str) -> bool:
        return (
            re.search(
                _BOUNDARY_L + re.escape(term) + _BOUNDARY_R, text, re.IGNORECASE
            )
            is not None
        )


def validate_term_map(entries: dict[str, list[str]]) -> None:
    if not entries:
        raise MalformedCatalog("term map is empty")
    for canonical, related in entries.items():
        if canonical != canonical.lower():
            raise MalformedCatalog(f"canonical term {canonical!r} is not lowercase")
        if not related or len(related) > 4:
            raise MalformedCatalog(
                f"term {canonical!r} must have 1..4 related terms, has {len(related)}"
            )
        for term in related:
            if term != term.lower():
                raise MalformedCatalog(f"related term {term!r} is not lowercase")
            if term == canonical:
                raise MalformedCatalog(f"term {canonical!r} maps to itself")
    # replacements must never reintroduce a mapped canonical term
    pattern = _compile(entries)
    for canonical, related in entries.items():
        for term in related:
            m = pattern.search(term)
            if m:
                raise MalformedCatalog(
                    f"related term {term!r} (for {canonical!r}) contains the "
                    f"mapped canonical term {m.group(0)!r}"
                )


def load_term_map(path: str | Path | None = None) -> TermMap:
    """Load and validate a term map; None loads the bundled map."""
    if path is None:
        with resources.files("ddxkit.data").joinpath("term_map.json").open() as fh:
            entries = json.load(fh)
    else:
        entries = read_json(path)
    if not isinstance(entries, dict):
        raise MalformedCatalog("term map must be a JSON object")
    entries = {k: list(v) for k, v in entries.items()}
    validate_term_map(entries)
    return TermMap(entries)


def diversify_sentence(sentence: str, term_map: TermMap, rng: np.random.Generator) -> str:
    """Replace every whole-word canonical-term occurrence in one sentence."""

    def _swap(match: re.Match) -> str:
        related = term_map.entries[match.group(0).lower()]
        return related[int(rng.integers(len(related)))]

    return term_map.canonical_pattern.sub(_swap, sentence)


def apply_mtd(
    report: PatientReport, term_map: TermMap, seed: int
) -> tuple[PatientReport, list[Edit]]:
    """Swap all mapped medical terms in a report; labels and header untouched.

    The random stream is derived from (seed, sample id), so per-report results
    are identical whether the corpus is processed serially or in parallel.
    """
    rng = derive_rng(seed, "mtd", report.id)
    modified = report.copy()
    edits: list[Edit] = []
    sentences = modified.sentences
    for idx, sentence in enumerate(sentences):
        swapped = diversify_sentence(sentence, term_map, rng)
        if swapped != sentence:
            sentences[idx] = swapped
            edits.append(
                Edit(
                    sample_id=report.id,
                    edit_kind="term_swap",
                    sentence_index=idx,
                    before=sentence,
                    after=swapped,
                )
            )
    n_history = len(modified.history_sentences)
    modified.history_sentences = sentences[:n_history]
    modified.symptom_sentences = sentences[n_history:]
    return modified, edits
