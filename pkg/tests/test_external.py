import numpy as np
import pytest

from ddxkit.errors import LengthMismatch, MalformedSample, UnknownSampleId, ValueOutOfRange
from ddxkit.jsonutil import write_jsonl
from ddxkit.model import import_external_predictions, predict, sigmoid
from ddxkit.model.external import export_predictions
from ddxkit.model.head import init_params


@pytest.fixture()
def small_corpus(test_corpus):
    return test_corpus[:10]


def _write(tmp_path, rows, name="preds.jsonl"):
    path = tmp_path / name
    write_jsonl(path, rows)
    return path


def test_logits_round_trip(tmp_path, small_corpus):
    params = init_params(256, 16, len(small_corpus[0].labels), seed=1)
    preds = predict([r.text for r in small_corpus], params, 256,
                    ids=[r.id for r in small_corpus])
    path = tmp_path / "preds.jsonl"
    export_predictions(path, preds)
    back = import_external_predictions(path, small_corpus)
    assert back.ids == preds.ids
    np.testing.assert_allclose(back.logits, preds.logits, rtol=0, atol=1e-12)
    np.testing.assert_allclose(back.probabilities, preds.probabilities, rtol=0, atol=1e-12)


def test_probability_and_logit_twins_agree(tmp_path, small_corpus):
    m = len(small_corpus[0].labels)
    rng = np.random.default_rng(6)
    logits = rng.normal(scale=2.0, size=(len(small_corpus), m))
    probs = sigmoid(logits)
    logit_path = _write(
        tmp_path,
        [{"id": r.id, "logits": list(map(float, logits[i]))}
         for i, r in enumerate(small_corpus)],
        "logits.jsonl",
    )
    prob_path = _write(
        tmp_path,
        [{"id": r.id, "probs": list(map(float, probs[i]))}
         for i, r in enumerate(small_corpus)],
        "probs.jsonl",
    )
    a = import_external_predictions(logit_path, small_corpus)
    b = import_external_predictions(prob_path, small_corpus)
    np.testing.assert_allclose(a.probabilities, b.probabilities, rtol=0, atol=1e-12)
    np.testing.assert_allclose(a.logits, b.logits, rtol=0, atol=1e-9)


def test_unknown_sample_id(tmp_path, small_corpus):
    path = _write(tmp_path, [{"id": "nope", "logits": [0.0] * 8}])
    with pytest.raises(UnknownSampleId):
        import_external_predictions(path, small_corpus)


def test_length_mismatch(tmp_path, small_corpus):
    """48 logits when the corpus carries 8 labels."""
    path = _write(tmp_path, [{"id": small_corpus[0].id, "logits": [0.0] * 48}])
    with pytest.raises(LengthMismatch):
        import_external_predictions(path, small_corpus)


def test_probability_out_of_range(tmp_path, small_corpus):
    m = len(small_corpus[0].labels)
    path = _write(tmp_path, [{"id": small_corpus[0].id, "probs": [1.5] + [0.5] * (m - 1)}])
    with pytest.raises(ValueOutOfRange):
        import_external_predictions(path, small_corpus)


def test_duplicate_id_rejected(tmp_path, small_corpus):
    m = len(small_corpus[0].labels)
    row = {"id": small_corpus[0].id, "logits": [0.0] * m}
    path = _write(tmp_path, [row, row])
    with pytest.raises(MalformedSample):
        import_external_predictions(path, small_corpus)


def test_corpus_order_kept_regardless_of_file_order(tmp_path, small_corpus):
    m = len(small_corpus[0].labels)
    rows = [
        {"id": r.id, "logits": [float(i)] * m} for i, r in enumerate(small_corpus)
    ]
    path = _write(tmp_path, list(reversed(rows)))
    preds = import_external_predictions(path, small_corpus)
    assert preds.ids == [r.id for r in small_corpus]
    assert preds.logits[0, 0] == 0.0
    assert preds.logits[-1, 0] == float(len(small_corpus) - 1)
