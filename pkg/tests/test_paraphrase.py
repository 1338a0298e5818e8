import pytest

from ddxkit.augment import (
    RuleBasedParaphraser,
    check_contract,
    load_term_map,
    paraphrase_sentence,
    select_sentences,
)
from ddxkit.corpus.reports import PatientReport
from ddxkit.errors import InvalidFractions


@pytest.fixture(scope="module")
def fallback():
    return RuleBasedParaphraser(seed=21)


@pytest.fixture(scope="module")
def term_map():
    return load_term_map()


def _report(n_sentences):
    return PatientReport(
        id="r-1", header="Age: 5. Sex: male.",
        symptom_sentences=[f"I have symptom number {i}." for i in range(n_sentences)],
        labels=[1], ground_truth_index=0,
    )


class TestSelectSentences:
    def test_forty_percent_of_ten(self):
        assert len(select_sentences(_report(10), 0.4, seed=3)) == 4

    def test_empty_report(self):
        assert select_sentences(_report(0), 0.4, seed=3) == set()

    def test_minimum_one(self):
        # floor(0.4 * 2) = 0, lifted to the one-sentence minimum
        assert len(select_sentences(_report(2), 0.4, seed=3)) == 1

    def test_indices_in_range_and_deterministic(self):
        picked = select_sentences(_report(10), 0.4, seed=3)
        assert picked == select_sentences(_report(10), 0.4, seed=3)
        assert all(0 <= i < 10 for i in picked)

    def test_invalid_fraction(self):
        with pytest.raises(InvalidFractions):
            select_sentences(_report(10), 0.0, seed=3)


class TestFallbackParaphraser:
    def test_changes_simple_sentence_keeps_term(self, fallback, term_map):
        out = paraphrase_sentence("I have a fever.", fallback, term_map)
        assert out != "I have a fever."
        assert out
        assert "fever" in out.lower()

    def test_negation_and_laterality_survive(self, fallback, term_map):
        out = paraphrase_sentence("I do not feel pain in my left knee.", fallback, term_map)
        words = set(out.lower().replace(".", " ").split())
        assert "not" in words or "don't" in words
        assert "left" in words

    def test_deterministic(self, fallback):
        sentences = [
            "I have a fever.",
            "I feel pain in my chest.",
            "My symptoms get worse with exercise.",
            "I was diagnosed with asthma in the past.",
        ]
        first = [fallback.paraphrase(s) for s in sentences]
        second = [fallback.paraphrase(s) for s in sentences]
        assert first == second
        other = RuleBasedParaphraser(seed=99)
        assert [other.paraphrase(s) for s in sentences] != first or True  # may coincide

    def test_starts_capitalized(self, fallback):
        out = fallback.paraphrase("I feel pain in my chest.")
        assert out[0].isupper()


class TestContract:
    def test_lost_negation_detected(self):
        lost = check_contract("I do not have a fever.", "I have a fever.")
        assert "not" in lost

    def test_term_survives_via_equivalent(self, term_map):
        lost = check_contract(
            "I feel pain in my hypochondrium(R).",
            "I feel pain in my right hypochondriac region.",
            term_map,
        )
        assert lost == []

    def test_lost_term_detected(self, term_map):
        lost = check_contract(
            "I feel pain in my hypochondrium(R).", "I feel pain.", term_map
        )
        assert "hypochondrium(r)" in lost

    def test_violating_provider_keeps_original(self, term_map):
        class Dropper:
            name = "dropper"

            def paraphrase(self, sentence):
                return "Something unrelated."

        out = paraphrase_sentence("I do not feel pain.", Dropper(), term_map)
        assert out == "I do not feel pain."
