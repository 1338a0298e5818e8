"""Training-set partition into paraphrase / term-diversification / unchanged."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..corpus.reports import PatientReport
from ..errors import InvalidFractions
from ..rng import derive_rng


@dataclass(frozen=True)
class AugmentPlan:
    sp_fraction: float = 0.15
    mtd_fraction: float = 0.15
    sp_sentence_fraction: float = 0.40
    seed: int = 0

    def validate(self) -> None:
        for name in ("sp_fraction", "mtd_fraction"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise InvalidFractions(f"{name}={value} outside [0, 1]")
        if self.sp_fraction + self.mtd_fraction > 1.0:
            raise InvalidFractions(
                f"sp_fraction + mtd_fraction = "
                f"{self.sp_fraction + self.mtd_fraction:.3f} exceeds 1"
            )
        if not 0.0 <= self.sp_sentence_fraction <= 1.0:
            raise InvalidFractions(
                f"sp_sentence_fraction={self.sp_sentence_fraction} outside [0, 1]"
            )


def partition_for_augment(
    corpus: list[PatientReport], plan: AugmentPlan
) -> tuple[list[PatientReport], list[PatientReport], list[PatientReport]]:
    """Split the corpus into (sp, mtd, unchanged), floor(f*N) sizes each.

    A seeded permutation makes the partition deterministic; the three sets are
    disjoint and cover the corpus.
    """
    plan.validate()
    n = len(corpus)
    n_sp = math.floor(plan.sp_fraction * n)
    n_mtd = math.floor(plan.mtd_fraction * n)
    perm = derive_rng(plan.seed, "partition").permutation(n)
    sp_idx = set(int(i) for i in perm[:n_sp])
    mtd_idx = set(int(i) for i in perm[n_sp : n_sp + n_mtd])
    sp = [corpus[i] for i in range(n) if i in sp_idx]
    mtd = [corpus[i] for i in range(n) if i in mtd_idx]
    unchanged = [corpus[i] for i in range(n) if i not in sp_idx and i not in mtd_idx]
    return sp, mtd, unchanged
