"""Medical-history exclusion.

Per sample, draw one proportion from the configured options and drop that
share of the history sentences, chosen uniformly. Symptoms, header, and labels
are untouched; a drawn 1.0 empties the history section entirely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from ..corpus.reports import PatientReport
from ..errors import InvalidFractions
from ..manifest import Edit, PerturbationManifest
from ..rng import derive_rng

DEFAULT_PROPORTIONS = (0.5, 0.6, 0.7, 0.8, 0.9, 1.0)


@dataclass(frozen=True)
class ExclusionConfig:
    proportion_options: tuple[float, ...] = DEFAULT_PROPORTIONS
    seed: int = 0

    def validate(self) -> None:
        if not self.proportion_options:
            raise InvalidFractions("proportion_options is empty")
        for p in self.proportion_options:
            if not 0.0 < p <= 1.0:
                raise InvalidFractions(f"proportion {p} outside (0, 1]")


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def exclude_history(
    report: PatientReport, config: ExclusionConfig
) -> tuple[PatientReport, PerturbationManifest]:
    """Remove round(p * H) uniformly chosen history sentences from one report.

    The drawn proportion is recorded in the manifest meta for auditing.
    Reports without history pass through unchanged (no proportion drawn).
    """
    config.validate()
    modified = report.copy()
    manifest = PerturbationManifest(seed=config.seed)
    h = len(report.history_sentences)
    if h == 0:
        return modified, manifest

    rng = derive_rng(config.seed, "exclude", report.id)
    p = config.proportion_options[int(rng.integers(len(config.proportion_options)))]
    k = _round_half_up(p * h)
    removed = sorted(int(i) for i in rng.choice(h, size=k, replace=False))
    manifest.meta["proportions"] = {report.id: p}
    for idx in removed:
        manifest.edits.append(
            Edit(
                sample_id=report.id,
                edit_kind="history_exclusion",
                sentence_index=idx,
                before=report.history_sentences[idx],
                after=None,
            )
        )
    modified.history_sentences = [
        s for i, s in enumerate(report.history_sentences) if i not in set(removed)
    ]
    return modified, manifest


def exclude_history_corpus(
    corpus: list[PatientReport], config: ExclusionConfig
) -> tuple[list[PatientReport], PerturbationManifest]:
    manifest = PerturbationManifest(
        seed=config.seed,
        meta={"proportion_options": list(config.proportion_options), "proportions": {}},
    )
    out: list[PatientReport] = []
    for report in corpus:
        modified, report_manifest = exclude_history(report, config)
        manifest.extend(report_manifest.edits)
        manifest.meta["proportions"].update(report_manifest.meta.get("proportions", {}))
        out.append(modified)
    return out, manifest
