"""Keyboard-typo insertion.

Five operators, each producing a single edit at a seeded-random position:
replace with an adjacent key, add an adjacent key, swap with the next
character, skip (delete) a character, and repeat (double) a character.
Adjacency covers same-row neighbors and vertically adjacent keys on a QWERTY
layout; digits and punctuation are never edited.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass

import numpy as np

from ..corpus.reports import PatientReport
from ..errors import IneligibleWord, InvalidFractions
from ..manifest import Edit, PerturbationManifest, replace_word
from ..rng import derive_rng


class TypoKind(enum.Enum):
    REPLACE_ADJACENT = "replace_adjacent"
    ADD_ADJACENT = "add_adjacent"
    SWAP = "swap"
    SKIP = "skip"
    REPEAT = "repeat"


_ROWS = ("qwertyuiop", "asdfghjkl", "zxcvbnm")
# column offsets between rows on a staggered keyboard
_ROW_SHIFT = {(0, 1): 0, (1, 0): 0, (1, 2): -1, (2, 1): 1}


def _build_neighbors() -> dict[str, str]:
    neighbors: dict[str, set[str]] = {c: set() for row in _ROWS for c in row}
    for r, row in enumerate(_ROWS):
        for i, c in enumerate(row):
            if i > 0:
                neighbors[c].add(row[i - 1])
            if i + 1 < len(row):
                neighbors[c].add(row[i + 1])
            for other in (r - 1, r + 1):
                if not 0 <= other < len(_ROWS):
                    continue
                shift = _ROW_SHIFT[(r, other)]
                for j in (i + shift, i + shift + 1):
                    if 0 <= j < len(_ROWS[other]):
                        neighbors[c].add(_ROWS[other][j])
    return {c: "".join(sorted(ns)) for c, ns in neighbors.items()}


QWERTY_NEIGHBORS = _build_neighbors()


@dataclass(frozen=True)
class TypoConfig:
    sentence_fraction: float = 0.5
    long_sentence_word_threshold: int = 10
    seed: int = 0

    def validate(self) -> None:
        if not 0.0 < self.sentence_fraction <= 1.0:
            raise InvalidFractions(
                f"sentence_fraction {self.sentence_fraction} outside (0, 1]"
            )
        if self.long_sentence_word_threshold < 1:
            raise InvalidFractions("long_sentence_word_threshold must be >= 1")


def _alpha_positions(word: str) -> list[int]:
    return [i for i, c in enumerate(word) if c.isalpha()]


def is_eligible(word: str) -> bool:
    """Typo targets need at least three alphabetic characters."""
    return len(_alpha_positions(word)) >= 3


def _case_like(template: str, c: str) -> str:
    return c.upper() if template.isupper() else c


def _positions_for(word: str, kind: TypoKind) -> list[int]:
    alpha = _alpha_positions(word)
    if kind in (TypoKind.REPLACE_ADJACENT, TypoKind.ADD_ADJACENT):
        return [i for i in alpha if word[i].lower() in QWERTY_NEIGHBORS]
    if kind is TypoKind.SWAP:
        # swap partners must both be letters and differ, or nothing changes
        return [
            i
            for i in alpha
            if i + 1 < len(word)
            and word[i + 1].isalpha()
            and word[i].lower() != word[i + 1].lower()
        ]
    return alpha  # SKIP, REPEAT


def apply_typo(word: str, kind: TypoKind, rng: np.random.Generator) -> str:
    """Insert exactly one typo of the given kind at a random eligible spot."""
    if not is_eligible(word):
        raise IneligibleWord(f"word {word!r} has fewer than 3 alphabetic characters")
    positions = _positions_for(word, kind)
    if not positions:
        raise IneligibleWord(f"no position in {word!r} supports a {kind.value} typo")
    i = positions[int(rng.integers(len(positions)))]
    c = word[i]
    if kind is TypoKind.REPLACE_ADJACENT:
        options = QWERTY_NEIGHBORS[c.lower()]
        repl = options[int(rng.integers(len(options)))]
        return word[:i] + _case_like(c, repl) + word[i + 1 :]
    if kind is TypoKind.ADD_ADJACENT:
        options = QWERTY_NEIGHBORS[c.lower()]
        extra = options[int(rng.integers(len(options)))]
        return word[: i + 1] + extra + word[i + 1 :]
    if kind is TypoKind.SWAP:
        return word[:i] + word[i + 1] + word[i] + word[i + 2 :]
    if kind is TypoKind.SKIP:
        return word[:i] + word[i + 1 :]
    return word[: i + 1] + c + word[i + 1 :]  # REPEAT


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def typos_for_sentence(word_count: int, threshold: int) -> int:
    """1 typo for short sentences, max(2, round(words/threshold)) for long."""
    if word_count <= threshold:
        return 1
    return max(2, _round_half_up(word_count / threshold))


def insert_typos(
    report: PatientReport, config: TypoConfig
) -> tuple[PatientReport, PerturbationManifest]:
    """Insert typos into ceil(fraction * N) pooled sentences of one report.

    Each edited word carries exactly one typo; headers and labels never
    change. Words with fewer than three letters are skipped, so a selected
    sentence receives min(t, eligible words) typos.
    """
    config.validate()
    rng = derive_rng(config.seed, "typos", report.id)
    manifest = PerturbationManifest(seed=config.seed)
    modified = report.copy()
    sentences = modified.sentences
    n = len(sentences)
    if n == 0:
        return modified, manifest

    n_selected = math.ceil(config.sentence_fraction * n)
    selected = sorted(int(i) for i in rng.choice(n, size=n_selected, replace=False))
    kinds = list(TypoKind)

    for idx in selected:
        sentence = sentences[idx]
        words = re.findall(r"\S+", sentence)
        eligible = [w_i for w_i, w in enumerate(words) if is_eligible(w)]
        if not eligible:
            continue
        t = min(typos_for_sentence(len(words), config.long_sentence_word_threshold),
                len(eligible))
        picked = sorted(int(j) for j in rng.choice(len(eligible), size=t, replace=False))
        edited = sentence
        for j in picked:
            w_i = eligible[j]
            word = words[w_i]
            kind = kinds[int(rng.integers(len(kinds)))]
            if not _positions_for(word, kind):
                feasible = [k for k in kinds if _positions_for(word, k)]
                kind = feasible[int(rng.integers(len(feasible)))]
            typoed = apply_typo(word, kind, rng)
            edited = replace_word(edited, w_i, word, typoed)
            manifest.edits.append(
                Edit(
                    sample_id=report.id,
                    edit_kind="typo",
                    sentence_index=idx,
                    before=word,
                    after=typoed,
                    word_index=w_i,
                    detail=kind.value,
                )
            )
        sentences[idx] = edited

    n_history = len(modified.history_sentences)
    modified.history_sentences = sentences[:n_history]
    modified.symptom_sentences = sentences[n_history:]
    return modified, manifest


def insert_typos_corpus(
    corpus: list[PatientReport], config: TypoConfig
) -> tuple[list[PatientReport], PerturbationManifest]:
    manifest = PerturbationManifest(
        seed=config.seed,
        meta={
            "sentence_fraction": config.sentence_fraction,
            "long_sentence_word_threshold": config.long_sentence_word_threshold,
        },
    )
    out: list[PatientReport] = []
    for report in corpus:
        modified, report_manifest = insert_typos(report, config)
        manifest.extend(report_manifest.edits)
        out.append(modified)
    return out, manifest
