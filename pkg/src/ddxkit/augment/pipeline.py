"""Corpus-level augmentation pass combining SP and MTD."""

from __future__ import annotations

from ..corpus.reports import PatientReport
from ..manifest import Edit, PerturbationManifest
from .paraphrase import Paraphraser, paraphrase_sentence, select_sentences
from .plan import AugmentPlan
from .terms import TermMap, apply_mtd


def _paraphrase_report(
    report: PatientReport, plan: AugmentPlan, provider: Paraphraser, term_map: TermMap | None
) -> tuple[PatientReport, list[Edit]]:
    indices = select_sentences(report, plan.sp_sentence_fraction, plan.seed)
    modified = report.copy()
    sentences = modified.sentences
    edits: list[Edit] = []
    for idx in sorted(indices):
        original = sentences[idx]
        paraphrased = paraphrase_sentence(original, provider, term_map)
        if paraphrased != original:
            sentences[idx] = paraphrased
            edits.append(
                Edit(
                    sample_id=report.id,
                    edit_kind="paraphrase",
                    sentence_index=idx,
                    before=original,
                    after=paraphrased,
                )
            )
    n_history = len(modified.history_sentences)
    modified.history_sentences = sentences[:n_history]
    modified.symptom_sentences = sentences[n_history:]
    return modified, edits


def augment_corpus(
    corpus: list[PatientReport],
    plan: AugmentPlan,
    term_map: TermMap,
    provider: Paraphraser,
) -> tuple[list[PatientReport], PerturbationManifest]:
    """Apply the partitioned SP/MTD pass; corpus order is preserved.

    With the fallback provider the whole pass is a pure function of
    (corpus, plan, term_map, seed). Headers and label vectors never change.
    """
    from .plan import partition_for_augment

    sp_set, mtd_set, _ = partition_for_augment(corpus, plan)
    sp_ids = {r.id for r in sp_set}
    mtd_ids = {r.id for r in mtd_set}

    manifest = PerturbationManifest(
        seed=plan.seed,
        meta={
            "sp_fraction": plan.sp_fraction,
            "mtd_fraction": plan.mtd_fraction,
            "sp_sentence_fraction": plan.sp_sentence_fraction,
            "provider": provider.name,
            "sp_samples": len(sp_set),
            "mtd_samples": len(mtd_set),
        },
    )

    out: list[PatientReport] = []
    for report in corpus:
        if report.id in sp_ids:
            modified, edits = _paraphrase_report(report, plan, provider, term_map)
        elif report.id in mtd_ids:
            modified, edits = apply_mtd(report, term_map, plan.seed)
        else:
            out.append(report.copy())
            continue
        manifest.extend(edits)
        out.append(modified)
    return out, manifest
