"""Two-layer classification head: linear -> tanh -> linear."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ShapeMismatch
from ..rng import derive_rng


@dataclass
class HeadParams:
    W1: np.ndarray  # (D, H)
    b1: np.ndarray  # (H,)
    W2: np.ndarray  # (H, M)
    b2: np.ndarray  # (M,)

    @property
    def dim(self) -> int:
        return self.W1.shape[0]

    @property
    def hidden(self) -> int:
        return self.W1.shape[1]

    @property
    def n_labels(self) -> int:
        return self.W2.shape[1]

    def validate(self) -> None:
        if self.W1.ndim != 2 or self.W2.ndim != 2:
            raise ShapeMismatch("weight matrices must be 2-D")
        if self.b1.shape != (self.W1.shape[1],) or self.b2.shape != (self.W2.shape[1],):
            raise ShapeMismatch("bias shapes do not match weight matrices")
        if self.W1.shape[1] != self.W2.shape[0]:
            raise ShapeMismatch(
                f"hidden widths disagree: W1 {self.W1.shape}, W2 {self.W2.shape}"
            )
        for name in ("W1", "b1", "W2", "b2"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ShapeMismatch(f"{name} contains non-finite values")

    def copy(self) -> "HeadParams":
        return HeadParams(self.W1.copy(), self.b1.copy(), self.W2.copy(), self.b2.copy())


def init_params(dim: int, hidden: int, n_labels: int, seed: int) -> HeadParams:
    """Uniform +-1/sqrt(fan_in) weights from the seeded stream; zero biases."""
    rng = derive_rng(seed, "init")
    bound1 = 1.0 / np.sqrt(dim)
    bound2 = 1.0 / np.sqrt(hidden)
    return HeadParams(
        W1=rng.uniform(-bound1, bound1, size=(dim, hidden)),
        b1=np.zeros(hidden),
        W2=rng.uniform(-bound2, bound2, size=(hidden, n_labels)),
        b2=np.zeros(n_labels),
    )


def head_forward(x: np.ndarray, params: HeadParams) -> np.ndarray:
    """Logits for a batch: tanh(x W1 + b1) W2 + b2. Accepts (N, D) or (D,)."""
    single = x.ndim == 1
    X = np.atleast_2d(np.asarray(x, dtype=np.float64))
    if X.shape[1] != params.W1.shape[0]:
        raise ShapeMismatch(
            f"feature dim {X.shape[1]} does not match W1 {params.W1.shape}"
        )
    params.validate()
    h_linear = X @ params.W1 + params.b1
    h_nonlinear = np.tanh(h_linear)
    logits = h_nonlinear @ params.W2 + params.b2
    return logits[0] if single else logits
