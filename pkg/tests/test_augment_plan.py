import pytest

from ddxkit.augment import AugmentPlan, partition_for_augment
from ddxkit.corpus.reports import PatientReport
from ddxkit.errors import InvalidFractions


def _reports(n):
    return [
        PatientReport(id=f"r-{i:05d}", header="Age: 1. Sex: male.",
                      symptom_sentences=["I have a fever."], labels=[1],
                      ground_truth_index=0)
        for i in range(n)
    ]


def test_15_15_70():
    sp, mtd, unchanged = partition_for_augment(_reports(100), AugmentPlan(seed=4))
    assert (len(sp), len(mtd), len(unchanged)) == (15, 15, 70)


def test_identity_plan():
    sp, mtd, unchanged = partition_for_augment(
        _reports(40), AugmentPlan(sp_fraction=0.0, mtd_fraction=0.0, seed=4)
    )
    assert (len(sp), len(mtd), len(unchanged)) == (0, 0, 40)


def test_floor_arithmetic_at_paper_scale():
    """floor(0.15 * 47979) twice plus the remainder."""
    corpus = _reports(47979)
    sp, mtd, unchanged = partition_for_augment(corpus, AugmentPlan(seed=4))
    assert len(sp) == 7196
    assert len(mtd) == 7196
    assert len(unchanged) == 33587


def test_disjoint_cover_deterministic():
    corpus = _reports(101)
    plan = AugmentPlan(sp_fraction=0.3, mtd_fraction=0.25, seed=9)
    sp, mtd, unchanged = partition_for_augment(corpus, plan)
    ids = [r.id for r in sp] + [r.id for r in mtd] + [r.id for r in unchanged]
    assert sorted(ids) == [r.id for r in corpus]
    sp2, mtd2, _ = partition_for_augment(corpus, plan)
    assert [r.id for r in sp2] == [r.id for r in sp]
    assert [r.id for r in mtd2] == [r.id for r in mtd]


def test_invalid_fractions():
    with pytest.raises(InvalidFractions):
        partition_for_augment(_reports(10), AugmentPlan(sp_fraction=0.6, mtd_fraction=0.5))
    with pytest.raises(InvalidFractions):
        partition_for_augment(_reports(10), AugmentPlan(sp_fraction=-0.1))
