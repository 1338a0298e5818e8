"""Mini-batch training of the classification head over hashed features."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from ..errors import EmptyCorpus, ShapeMismatch
from ..rng import derive_rng
from .encoder import DEFAULT_DIM, HASH_SALT, encode_batch
from .head import HeadParams, init_params
from .loss import LOSS_NORMALIZATION, bcel_gradients, bcel_loss, head_forward_cached

logger = logging.getLogger(__name__)

DEFAULT_HIDDEN = 256


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 10
    batch_size: int = 16
    learning_rate: float = 1e-3
    weight_decay: float = 0.01
    schedule: str = "constant"
    seed: int = 0
    optimizer: str = "adamw_style"  # or "sgd"
    beta1: float = 0.9
    beta2: float = 0.999
    eps: float = 1e-8

    def validate(self) -> None:
        if self.epochs <= 0 or self.batch_size <= 0:
            raise ShapeMismatch("epochs and batch_size must be positive")
        if self.learning_rate < 0:
            raise ShapeMismatch("learning rate must be >= 0")
        if self.schedule != "constant":
            raise ShapeMismatch(f"unsupported schedule {self.schedule!r}")
        if self.optimizer not in ("adamw_style", "sgd"):
            raise ShapeMismatch(f"unsupported optimizer {self.optimizer!r}")


@dataclass
class TrainResult:
    params: HeadParams
    log: dict = field(default_factory=dict)


class _AdamW:
    """Decoupled weight decay on the weight matrices only; biases undecayed."""

    def __init__(self, params: HeadParams, config: TrainConfig):
        self.config = config
        self.m = {k: np.zeros_like(getattr(params, k)) for k in ("W1", "b1", "W2", "b2")}
        self.v = {k: np.zeros_like(getattr(params, k)) for k in ("W1", "b1", "W2", "b2")}
        self.t = 0

    def step(self, params: HeadParams, grads) -> None:
        cfg = self.config
        self.t += 1
        bias1 = 1.0 - cfg.beta1**self.t
        bias2 = 1.0 - cfg.beta2**self.t
        for key in ("W1", "b1", "W2", "b2"):
            g = getattr(grads, key)
            self.m[key] = cfg.beta1 * self.m[key] + (1.0 - cfg.beta1) * g
            self.v[key] = cfg.beta2 * self.v[key] + (1.0 - cfg.beta2) * g * g
            m_hat = self.m[key] / bias1
            v_hat = self.v[key] / bias2
            tensor = getattr(params, key)
            tensor -= cfg.learning_rate * m_hat / (np.sqrt(v_hat) + cfg.eps)
            if key in ("W1", "W2") and cfg.weight_decay:
                tensor -= cfg.learning_rate * cfg.weight_decay * tensor


class _SGD:
    def __init__(self, params: HeadParams, config: TrainConfig):
        self.config = config

    def step(self, params: HeadParams, grads) -> None:
        for key in ("W1", "b1", "W2", "b2"):
            getattr(params, key)[...] -= self.config.learning_rate * getattr(grads, key)


def train_on_features(
    X: np.ndarray, Y: np.ndarray, config: TrainConfig, hidden: int = DEFAULT_HIDDEN
) -> TrainResult:
    """Train the head on a precomputed feature matrix. Deterministic per seed."""
    config.validate()
    if X.shape[0] == 0:
        raise EmptyCorpus("cannot train on an empty corpus")
    if X.shape[0] != Y.shape[0]:
        raise ShapeMismatch(f"features {X.shape} vs labels {Y.shape}")

    n, dim = X.shape
    params = init_params(dim, hidden, Y.shape[1], config.seed)
    optimizer = (_AdamW if config.optimizer == "adamw_style" else _SGD)(params, config)
    shuffle_rng = derive_rng(config.seed, "shuffle")

    epoch_losses: list[float] = []
    for epoch in range(config.epochs):
        order = shuffle_rng.permutation(n)
        for start in range(0, n, config.batch_size):
            batch = order[start : start + config.batch_size]
            _, grads = bcel_gradients(X[batch], Y[batch], params)
            optimizer.step(params, grads)
        logits, _ = head_forward_cached(X, params)
        epoch_loss = bcel_loss(logits, Y)
        epoch_losses.append(epoch_loss)
        logger.debug("epoch %d: loss %.6f", epoch + 1, epoch_loss)

    log = {
        "epochs": config.epochs,
        "batch_size": config.batch_size,
        "learning_rate": config.learning_rate,
        "weight_decay": config.weight_decay,
        "optimizer": config.optimizer,
        "schedule": config.schedule,
        "seed": config.seed,
        "loss_normalization": LOSS_NORMALIZATION,
        "epoch_loss": epoch_losses,
    }
    return TrainResult(params=params, log=log)


def train_model(
    corpus,
    config: TrainConfig,
    dim: int = DEFAULT_DIM,
    hidden: int = DEFAULT_HIDDEN,
    salt: int = HASH_SALT,
) -> TrainResult:
    """Encode a report corpus once and train the head on it.

    ``corpus`` is any sequence of samples with ``text`` and ``labels``
    attributes (patient reports or scored samples).
    """
    if not corpus:
        raise EmptyCorpus("cannot train on an empty corpus")
    m = len(corpus[0].labels)
    for sample in corpus:
        if len(sample.labels) != m:
            raise ShapeMismatch(f"sample {sample.id}: label vector length != {m}")
    X = encode_batch([sample.text for sample in corpus], dim, salt)
    Y = np.array([sample.labels for sample in corpus], dtype=np.float64)
    return train_on_features(X, Y, config, hidden)
