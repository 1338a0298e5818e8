"""Loss and gradient tests against independent oracles.

The direct-formula oracle evaluates Eq.-style BCEL in 50-digit arithmetic via
mpmath; the gradient oracle is central finite differences over the full
parameter vector.
"""

import math

import mpmath
import numpy as np
import pytest

from ddxkit.errors import ShapeMismatch
from ddxkit.model import bcel_gradients, bcel_loss, head_forward, init_params, sigmoid
from ddxkit.model.head import HeadParams

mpmath.mp.dps = 50


def _oracle_loss(logits, targets) -> float:
    """-(1/N) sum_ij [y ln p + (1-y) ln(1-p)] in extended precision."""
    n = len(logits)
    total = mpmath.mpf(0)
    for i in range(n):
        for z, y in zip(logits[i], targets[i]):
            p = 1 / (1 + mpmath.e ** (-mpmath.mpf(float(z))))
            total += y * mpmath.log(p) + (1 - y) * mpmath.log(1 - p)
    return float(-total / n)


class TestSigmoid:
    def test_sigma_zero_is_half(self):
        assert sigmoid(np.array(0.0)) == 0.5

    def test_extremes_stay_finite(self):
        out = sigmoid(np.array([-1000.0, 1000.0]))
        assert np.isfinite(out).all()
        assert out[0] == 0.0 and out[1] == 1.0  # float64 saturation

    def test_matches_formula_in_safe_range(self):
        x = np.linspace(-30, 30, 101)
        np.testing.assert_allclose(sigmoid(x), 1 / (1 + np.exp(-x)), rtol=1e-14)


class TestBcelLoss:
    def test_single_label_logit_zero_is_ln2(self):
        loss = bcel_loss(np.array([[0.0]]), np.array([[1.0]]))
        assert loss == pytest.approx(math.log(2), abs=1e-15)

    def test_saturated_correct_prediction_near_zero(self):
        loss = bcel_loss(np.array([[50.0, -50.0]]), np.array([[1.0, 0.0]]))
        assert 0.0 <= loss < 1e-20

    def test_matches_extended_precision_oracle(self):
        rng = np.random.default_rng(23)
        for _ in range(30):
            n, m = int(rng.integers(1, 6)), int(rng.integers(1, 5))
            logits = rng.normal(scale=3.0, size=(n, m))
            targets = rng.integers(0, 2, size=(n, m)).astype(float)
            got = bcel_loss(logits, targets)
            expected = _oracle_loss(logits, targets)
            assert got == pytest.approx(expected, abs=1e-10)

    def test_normalizes_by_samples_only(self):
        """Eq.-literal form: summing over labels, dividing by N."""
        logits = np.array([[0.0, 0.0, 0.0]])
        targets = np.array([[1.0, 1.0, 1.0]])
        assert bcel_loss(logits, targets) == pytest.approx(3 * math.log(2), abs=1e-12)

    def test_nonnegative(self):
        rng = np.random.default_rng(29)
        for _ in range(50):
            logits = rng.normal(scale=5.0, size=(3, 4))
            targets = rng.integers(0, 2, size=(3, 4)).astype(float)
            assert bcel_loss(logits, targets) >= 0.0

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            bcel_loss(np.zeros((2, 3)), np.zeros((2, 4)))
        with pytest.raises(ShapeMismatch):
            bcel_loss(np.zeros((1, 2)), np.array([[0.5, 1.0]]))


def _flatten(grads):
    return np.concatenate([getattr(grads, k).ravel() for k in ("W1", "b1", "W2", "b2")])


def _fd_gradient(X, Y, params, step=1e-5):
    flat = []
    for key in ("W1", "b1", "W2", "b2"):
        tensor = getattr(params, key)
        grad = np.zeros_like(tensor)
        it = np.nditer(tensor, flags=["multi_index"])
        while not it.finished:
            idx = it.multi_index
            original = tensor[idx]
            tensor[idx] = original + step
            up = bcel_loss(head_forward(X, params), Y)
            tensor[idx] = original - step
            down = bcel_loss(head_forward(X, params), Y)
            tensor[idx] = original
            grad[idx] = (up - down) / (2 * step)
            it.iternext()
        flat.append(grad.ravel())
    return np.concatenate(flat)


class TestGradients:
    def test_matches_finite_differences(self):
        rng = np.random.default_rng(31)
        for _ in range(15):
            n, d, h, m = (int(v) for v in rng.integers(1, 6, size=4))
            params = HeadParams(
                W1=rng.normal(scale=0.5, size=(d, h)), b1=rng.normal(scale=0.1, size=h),
                W2=rng.normal(scale=0.5, size=(h, m)), b2=rng.normal(scale=0.1, size=m),
            )
            X = rng.normal(size=(n, d))
            Y = rng.integers(0, 2, size=(n, m)).astype(float)
            _, grads = bcel_gradients(X, Y, params)
            analytic = _flatten(grads)
            numeric = _fd_gradient(X, Y, params)
            rel = np.linalg.norm(analytic - numeric) / max(
                np.linalg.norm(analytic), np.linalg.norm(numeric), 1e-8
            )
            assert rel < 1e-4

    def test_saturated_correct_gradient_vanishes(self):
        params = HeadParams(
            W1=np.full((2, 2), 20.0), b1=np.zeros(2),
            W2=np.full((2, 1), 20.0), b2=np.zeros(1),
        )
        X = np.ones((1, 2))
        Y = np.ones((1, 1))
        _, grads = bcel_gradients(X, Y, params)
        assert np.linalg.norm(_flatten(grads)) < 1e-8

    def test_duplicated_batch_same_gradient(self):
        """1/N normalization: doubling the batch by duplication changes nothing."""
        rng = np.random.default_rng(37)
        params = init_params(6, 4, 3, seed=37)
        X = rng.normal(size=(4, 6))
        Y = rng.integers(0, 2, size=(4, 3)).astype(float)
        _, single = bcel_gradients(X, Y, params)
        _, doubled = bcel_gradients(np.vstack([X, X]), np.vstack([Y, Y]), params)
        np.testing.assert_allclose(_flatten(doubled), _flatten(single), rtol=0, atol=1e-15)

    def test_loss_value_matches_bcel_loss(self):
        rng = np.random.default_rng(41)
        params = init_params(5, 3, 2, seed=41)
        X = rng.normal(size=(3, 5))
        Y = rng.integers(0, 2, size=(3, 2)).astype(float)
        loss, _ = bcel_gradients(X, Y, params)
        assert loss == pytest.approx(bcel_loss(head_forward(X, params), Y), abs=1e-14)
