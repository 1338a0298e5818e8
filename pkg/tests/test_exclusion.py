from collections import Counter

from ddxkit.behave import ExclusionConfig, exclude_history
from ddxkit.behave.exclusion import DEFAULT_PROPORTIONS, _round_half_up
from ddxkit.corpus.reports import PatientReport


def _report(h, report_id="r-0"):
    return PatientReport(
        id=report_id, header="Age: 33. Sex: male.",
        history_sentences=[f"History item {i}." for i in range(h)],
        symptom_sentences=["I have a fever.", "I have chills."],
        labels=[1, 0], ground_truth_index=0,
    )


def test_output_length_formula():
    config = ExclusionConfig(seed=2)
    for h in range(1, 9):
        for i in range(30):
            report = _report(h, report_id=f"r-{h}-{i}")
            modified, manifest = exclude_history(report, config)
            p = manifest.meta["proportions"][report.id]
            assert p in DEFAULT_PROPORTIONS
            assert len(modified.history_sentences) == h - _round_half_up(p * h)


def test_full_removal_at_one():
    config = ExclusionConfig(proportion_options=(1.0,), seed=2)
    report = _report(4)
    modified, _ = exclude_history(report, config)
    assert modified.history_sentences == []
    assert modified.symptom_sentences == report.symptom_sentences


def test_half_removal():
    config = ExclusionConfig(proportion_options=(0.5,), seed=2)
    modified, _ = exclude_history(_report(4), config)
    assert len(modified.history_sentences) == 2


def test_symptoms_header_labels_untouched():
    config = ExclusionConfig(seed=2)
    report = _report(5)
    modified, _ = exclude_history(report, config)
    assert modified.symptom_sentences == report.symptom_sentences
    assert modified.header == report.header
    assert modified.labels == report.labels


def test_empty_history_passthrough():
    report = _report(0)
    modified, manifest = exclude_history(report, ExclusionConfig(seed=2))
    assert modified.to_row() == report.to_row()
    assert manifest.edits == []
    assert "proportions" not in manifest.meta


def test_remaining_sentences_keep_order():
    config = ExclusionConfig(proportion_options=(0.5,), seed=6)
    report = _report(6)
    modified, _ = exclude_history(report, config)
    positions = [report.history_sentences.index(s) for s in modified.history_sentences]
    assert positions == sorted(positions)


def test_drawn_proportions_roughly_uniform():
    """Over 1000 reports the six options land within +-5 points of 1/6."""
    config = ExclusionConfig(seed=42)
    counts = Counter()
    n = 1000
    for i in range(n):
        _, manifest = exclude_history(_report(4, report_id=f"r-{i}"), config)
        counts[manifest.meta["proportions"][f"r-{i}"]] += 1
    assert set(counts) == set(DEFAULT_PROPORTIONS)
    for p, count in counts.items():
        assert abs(count / n - 1 / 6) < 0.05, (p, count)
