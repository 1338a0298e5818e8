"""Desk-scale multi-label classifier: hashed features + two-layer head."""

from .checkpoint import Model, load_checkpoint, save_checkpoint
from .encoder import (
    DEFAULT_DIM,
    HASH_SALT,
    HAS_COMPILED_KERNEL,
    KERNEL_NAME,
    encode_batch,
    encode_features,
    tokenize,
)
from .external import export_predictions, import_external_predictions
from .head import HeadParams, head_forward, init_params
from .loss import (
    LOSS_NORMALIZATION,
    bcel_gradients,
    bcel_loss,
    logits_from_probabilities,
    probabilities_from_logits,
    sigmoid,
)
from .predict import PredictionSet, predict
from .train import DEFAULT_HIDDEN, TrainConfig, TrainResult, train_model, train_on_features

__all__ = [
    "DEFAULT_DIM",
    "DEFAULT_HIDDEN",
    "HASH_SALT",
    "HAS_COMPILED_KERNEL",
    "KERNEL_NAME",
    "HeadParams",
    "LOSS_NORMALIZATION",
    "Model",
    "PredictionSet",
    "TrainConfig",
    "TrainResult",
    "bcel_gradients",
    "bcel_loss",
    "encode_batch",
    "encode_features",
    "export_predictions",
    "head_forward",
    "import_external_predictions",
    "init_params",
    "load_checkpoint",
    "logits_from_probabilities",
    "predict",
    "probabilities_from_logits",
    "save_checkpoint",
    "sigmoid",
    "tokenize",
    "train_model",
    "train_on_features",
]
