"""Sigmoid, binary cross-entropy-with-logits, and its analytic gradients.

The loss is the literal multi-label form: sum over labels, mean over samples
(divide by N only). That differs from the mean-over-all-elements convention of
some libraries; training logs record which normalization is active.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ShapeMismatch
from .head import HeadParams

LOSS_NORMALIZATION = "sum_over_labels_mean_over_samples"

# probabilities are clipped into the open interval so downstream log/logit
# calls stay finite even where float64 sigmoid saturates
P_EPS = 1e-12


def sigmoid(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


def probabilities_from_logits(logits: np.ndarray) -> np.ndarray:
    return np.clip(sigmoid(logits), P_EPS, 1.0 - P_EPS)


def logits_from_probabilities(probs: np.ndarray) -> np.ndarray:
    p = np.clip(np.asarray(probs, dtype=np.float64), P_EPS, 1.0 - P_EPS)
    return np.log(p) - np.log1p(-p)


def _softplus(x: np.ndarray) -> np.ndarray:
    # log(1 + e^x), saturation-safe
    return np.maximum(x, 0.0) + np.log1p(np.exp(-np.abs(x)))


def _check_pair(logits: np.ndarray, targets: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    z = np.atleast_2d(np.asarray(logits, dtype=np.float64))
    y = np.atleast_2d(np.asarray(targets, dtype=np.float64))
    if z.shape != y.shape:
        raise ShapeMismatch(f"logits {z.shape} vs targets {y.shape}")
    if not np.isin(y, (0.0, 1.0)).all():
        raise ShapeMismatch("targets must be 0/1")
    return z, y


def bcel_loss(logits: np.ndarray, targets: np.ndarray) -> float:
    """-(1/N) sum_i sum_j [y log p + (1-y) log(1-p)], p = sigmoid(logits).

    Evaluated in the log-sum-exp form, so saturated logits stay finite.
    """
    z, y = _check_pair(logits, targets)
    elem = y * _softplus(-z) + (1.0 - y) * _softplus(z)
    return float(elem.sum() / z.shape[0])


@dataclass
class HeadGrads:
    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray


def head_forward_cached(X: np.ndarray, params: HeadParams):
    h_nonlinear = np.tanh(X @ params.W1 + params.b1)
    logits = h_nonlinear @ params.W2 + params.b2
    return logits, h_nonlinear


def bcel_gradients(
    X: np.ndarray, targets: np.ndarray, params: HeadParams
) -> tuple[float, HeadGrads]:
    """Exact gradients of bcel_loss(head_forward(X), targets) w.r.t. params."""
    X = np.atleast_2d(np.asarray(X, dtype=np.float64))
    if X.shape[1] != params.W1.shape[0]:
        raise ShapeMismatch(f"feature dim {X.shape[1]} does not match W1 {params.W1.shape}")
    logits, h_nl = head_forward_cached(X, params)
    z, y = _check_pair(logits, targets)
    n = z.shape[0]

    loss = float((y * _softplus(-z) + (1.0 - y) * _softplus(z)).sum() / n)
    d_logits = (sigmoid(z) - y) / n  # (N, M)
    grad_W2 = h_nl.T @ d_logits
    grad_b2 = d_logits.sum(axis=0)
    d_hidden = (d_logits @ params.W2.T) * (1.0 - h_nl**2)
    grad_W1 = X.T @ d_hidden
    grad_b1 = d_hidden.sum(axis=0)
    return loss, HeadGrads(W1=grad_W1, b1=grad_b1, W2=grad_W2, b2=grad_b2)
