import json

from ddxkit.augment import AugmentPlan, RuleBasedParaphraser, augment_corpus, load_term_map
from ddxkit.behave import ExclusionConfig, TypoConfig, exclude_history_corpus, insert_typos_corpus
from ddxkit.corpus import write_corpus
from ddxkit.manifest import PerturbationManifest, replay


def _corpus_bytes(tmp_path, name, reports):
    path = tmp_path / name
    write_corpus(path, reports)
    return path.read_bytes()


def test_augment_replay_byte_exact(tmp_path, train_corpus):
    corpus = [r.copy() for r in train_corpus[:120]]
    plan = AugmentPlan(seed=31)
    modified, manifest = augment_corpus(
        corpus, plan, load_term_map(), RuleBasedParaphraser(seed=31)
    )
    replayed = replay(manifest, corpus)
    assert _corpus_bytes(tmp_path, "a.jsonl", replayed) == _corpus_bytes(
        tmp_path, "b.jsonl", modified
    )


def test_typos_replay_byte_exact(tmp_path, test_corpus):
    corpus = [r.copy() for r in test_corpus[:60]]
    modified, manifest = insert_typos_corpus(corpus, TypoConfig(seed=8))
    replayed = replay(manifest, corpus)
    assert _corpus_bytes(tmp_path, "a.jsonl", replayed) == _corpus_bytes(
        tmp_path, "b.jsonl", modified
    )


def test_exclusion_replay_byte_exact(tmp_path, test_corpus):
    corpus = [r.copy() for r in test_corpus[:60]]
    modified, manifest = exclude_history_corpus(corpus, ExclusionConfig(seed=8))
    replayed = replay(manifest, corpus)
    assert _corpus_bytes(tmp_path, "a.jsonl", replayed) == _corpus_bytes(
        tmp_path, "b.jsonl", modified
    )


def test_manifest_json_round_trip(tmp_path, test_corpus):
    corpus = [r.copy() for r in test_corpus[:20]]
    modified, manifest = insert_typos_corpus(corpus, TypoConfig(seed=8))
    path = tmp_path / "manifest.json"
    manifest.save(path)
    loaded = PerturbationManifest.load(path)
    assert loaded.seed == manifest.seed
    assert [e.to_row() for e in loaded.edits] == [e.to_row() for e in manifest.edits]
    replayed = replay(loaded, corpus)
    assert [r.to_row() for r in replayed] == [r.to_row() for r in modified]


def test_manifest_file_is_plain_json(tmp_path, test_corpus):
    _, manifest = insert_typos_corpus([test_corpus[0].copy()], TypoConfig(seed=8))
    path = tmp_path / "manifest.json"
    manifest.save(path)
    data = json.loads(path.read_text())
    assert set(data) == {"seed", "edits", "meta"}
    if data["edits"]:
        assert {"sample_id", "edit_kind", "sentence_index", "before", "after"} <= set(
            data["edits"][0]
        )
