import numpy as np
import pytest

from ddxkit.errors import EmptyCorpus
from ddxkit.model import TrainConfig, train_model, train_on_features
from ddxkit.model.head import init_params

DIM = 256
HIDDEN = 32


@pytest.fixture(scope="module")
def tiny_corpus(train_corpus):
    return train_corpus[:64]


def _params_equal(a, b):
    return all(np.array_equal(getattr(a, k), getattr(b, k)) for k in ("W1", "b1", "W2", "b2"))


def test_lr_zero_is_identity(tiny_corpus):
    config = TrainConfig(epochs=3, learning_rate=0.0, seed=5)
    result = train_model(tiny_corpus, config, dim=DIM, hidden=HIDDEN)
    initial = init_params(DIM, HIDDEN, len(tiny_corpus[0].labels), seed=5)
    assert _params_equal(result.params, initial)


def test_same_seed_bit_identical(tiny_corpus):
    config = TrainConfig(epochs=4, seed=5)
    a = train_model(tiny_corpus, config, dim=DIM, hidden=HIDDEN)
    b = train_model(tiny_corpus, config, dim=DIM, hidden=HIDDEN)
    assert _params_equal(a.params, b.params)
    assert a.log["epoch_loss"] == b.log["epoch_loss"]


def test_different_seed_differs(tiny_corpus):
    a = train_model(tiny_corpus, TrainConfig(epochs=2, seed=5), dim=DIM, hidden=HIDDEN)
    b = train_model(tiny_corpus, TrainConfig(epochs=2, seed=6), dim=DIM, hidden=HIDDEN)
    assert not _params_equal(a.params, b.params)


def test_loss_non_increasing_small_lr_sgd(tiny_corpus):
    config = TrainConfig(epochs=15, learning_rate=1e-4, optimizer="sgd", seed=5)
    result = train_model(tiny_corpus, config, dim=DIM, hidden=HIDDEN)
    losses = result.log["epoch_loss"]
    assert all(later <= earlier + 1e-12 for earlier, later in zip(losses, losses[1:]))


def test_log_records_normalization(tiny_corpus):
    result = train_model(tiny_corpus, TrainConfig(epochs=1, seed=5), dim=DIM, hidden=HIDDEN)
    assert result.log["loss_normalization"] == "sum_over_labels_mean_over_samples"
    assert len(result.log["epoch_loss"]) == 1


def test_weight_decay_shrinks_weights_only(tiny_corpus):
    plain = train_model(
        tiny_corpus, TrainConfig(epochs=3, weight_decay=0.0, seed=5), dim=DIM, hidden=HIDDEN
    )
    decayed = train_model(
        tiny_corpus, TrainConfig(epochs=3, weight_decay=0.2, seed=5), dim=DIM, hidden=HIDDEN
    )
    assert np.abs(decayed.params.W1).sum() < np.abs(plain.params.W1).sum()


def test_empty_corpus():
    with pytest.raises(EmptyCorpus):
        train_model([], TrainConfig())
    with pytest.raises(EmptyCorpus):
        train_on_features(np.zeros((0, 4)), np.zeros((0, 2)), TrainConfig())


def test_sgd_path_trains(tiny_corpus):
    config = TrainConfig(epochs=10, learning_rate=0.5, optimizer="sgd", seed=5)
    result = train_model(tiny_corpus, config, dim=DIM, hidden=HIDDEN)
    losses = result.log["epoch_loss"]
    assert losses[-1] < losses[0]
