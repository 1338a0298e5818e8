"""Metric tests against brute-force set-arithmetic oracles.

The oracles below work on Python sets and integers only; they share nothing
with the vectorized implementations they check.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddxkit.errors import IndexOutOfRange, ShapeMismatch, ValueOutOfRange
from ddxkit.evaluate import binarize_predictions, gtd_score, hamming_loss, samples_prf
from ddxkit.model import PredictionSet
from ddxkit.model.loss import logits_from_probabilities


def oracle_hamming(pred, truth):
    wrong = 0
    for row_p, row_t in zip(pred, truth):
        for a, b in zip(row_p, row_t):
            wrong += int(a != b)
    return wrong / (len(pred) * len(pred[0]))


def oracle_prf(pred, truth):
    ps, rs, fs = [], [], []
    for row_p, row_t in zip(pred, truth):
        p_set = {j for j, v in enumerate(row_p) if v}
        t_set = {j for j, v in enumerate(row_t) if v}
        if not p_set and not t_set:
            ps.append(1.0)
            rs.append(1.0)
            fs.append(1.0)
            continue
        tp = len(p_set & t_set)
        p = tp / len(p_set) if p_set else 0.0
        r = tp / len(t_set) if t_set else 0.0
        ps.append(p)
        rs.append(r)
        fs.append(2 * p * r / (p + r) if p + r > 0 else 0.0)
    n = len(pred)
    return sum(ps) / n, sum(rs) / n, sum(fs) / n


def oracle_gtd_threshold(probabilities, gt_indices, t):
    hits = sum(1 for row, gt in zip(probabilities, gt_indices) if row[gt] >= t)
    return hits / len(gt_indices)


def oracle_gtd_topk(probabilities, gt_indices, k):
    hits = 0
    for row, gt in zip(probabilities, gt_indices):
        ranked = sorted(range(len(row)), key=lambda j: (-row[j], j))
        hits += int(gt in ranked[:k])
    return hits / len(gt_indices)


def _random_instance(rng, max_n=20, max_m=6):
    n = int(rng.integers(1, max_n + 1))
    m = int(rng.integers(1, max_m + 1))
    probs = rng.random((n, m))
    truth = rng.integers(0, 2, size=(n, m))
    gt = [int(rng.integers(0, m)) for _ in range(n)]
    return probs, truth, gt


class TestKnownValues:
    def test_identical_is_zero(self):
        truth = np.array([[1, 0, 1], [0, 1, 0]])
        assert hamming_loss(truth, truth) == 0.0

    def test_one_wrong_bit_in_49(self):
        truth = np.zeros((1, 49), dtype=int)
        pred = truth.copy()
        pred[0, 13] = 1
        assert hamming_loss(pred, truth) == pytest.approx(1 / 49, abs=1e-15)

    def test_one_tp_one_fp_one_fn(self):
        """truth {A,B}, pred {A,C} -> P = R = F1 = 0.5"""
        truth = np.array([[1, 1, 0]])
        pred = np.array([[1, 0, 1]])
        assert samples_prf(pred, truth) == (0.5, 0.5, 0.5)

    def test_perfect_prediction(self):
        rng = np.random.default_rng(1)
        truth = rng.integers(0, 2, size=(10, 5))
        assert samples_prf(truth, truth) == (1.0, 1.0, 1.0)

    def test_symmetry(self):
        rng = np.random.default_rng(2)
        a = rng.integers(0, 2, size=(6, 4))
        b = rng.integers(0, 2, size=(6, 4))
        assert hamming_loss(a, b) == hamming_loss(b, a)


class TestDegenerateConventions:
    def test_empty_pred_nonempty_truth(self):
        p, r, f1 = samples_prf(np.array([[0, 0]]), np.array([[1, 0]]))
        assert (p, r, f1) == (0.0, 0.0, 0.0)

    def test_both_empty(self):
        assert samples_prf(np.array([[0, 0]]), np.array([[0, 0]])) == (1.0, 1.0, 1.0)

    def test_nonempty_pred_empty_truth(self):
        p, r, f1 = samples_prf(np.array([[1, 0]]), np.array([[0, 0]]))
        assert (p, r, f1) == (0.0, 0.0, 0.0)


class TestBinarize:
    def test_threshold_inclusive(self):
        preds = PredictionSet.from_probabilities(["a"], np.array([[0.5, 0.49999]]))
        bits = binarize_predictions(preds, 0.5)
        assert bits.tolist() == [[1, 0]]

    def test_monotone_in_threshold(self):
        rng = np.random.default_rng(3)
        preds = PredictionSet.from_probabilities(
            [f"s{i}" for i in range(10)], rng.random((10, 6))
        )
        low = binarize_predictions(preds, 0.2)
        high = binarize_predictions(preds, 0.8)
        assert ((high == 1) <= (low == 1)).all()

    def test_elementwise_oracle(self):
        rng = np.random.default_rng(4)
        probs = rng.random((8, 5))
        preds = PredictionSet.from_probabilities([f"s{i}" for i in range(8)], probs)
        for t in (0.2, 0.5, 0.95):
            bits = binarize_predictions(preds, t)
            for i in range(8):
                for j in range(5):
                    assert bits[i, j] == int(preds.probabilities[i, j] >= t)

    def test_threshold_bounds(self):
        preds = PredictionSet.from_probabilities(["a"], np.array([[0.5]]))
        with pytest.raises(ValueOutOfRange):
            binarize_predictions(preds, 0.0)


class TestOracleEquivalence:
    def test_hamming_and_prf_match_oracles(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            probs, truth, _ = _random_instance(rng)
            pred = (probs >= 0.5).astype(int)
            assert hamming_loss(pred, truth) == oracle_hamming(pred.tolist(), truth.tolist())
            got = samples_prf(pred, truth)
            expected = oracle_prf(pred.tolist(), truth.tolist())
            assert got == pytest.approx(expected, abs=1e-12)

    def test_gtd_matches_oracles(self):
        rng = np.random.default_rng(12)
        for _ in range(300):
            probs, _, gt = _random_instance(rng)
            preds = PredictionSet.from_probabilities(
                [f"s{i}" for i in range(len(gt))], probs
            )
            t = float(rng.uniform(0.05, 0.95))
            k = int(rng.integers(1, probs.shape[1] + 1))
            assert gtd_score(preds, gt, threshold=t) == pytest.approx(
                oracle_gtd_threshold(preds.probabilities, gt, t), abs=1e-12
            )
            assert gtd_score(preds, gt, top_k=k) == pytest.approx(
                oracle_gtd_topk(preds.probabilities, gt, k), abs=1e-12
            )


class TestGtd:
    def test_saturated(self):
        probs = np.full((4, 3), 0.01)
        gt = [0, 1, 2, 0]
        for i, g in enumerate(gt):
            probs[i, g] = 0.99
        preds = PredictionSet.from_probabilities([f"s{i}" for i in range(4)], probs)
        assert gtd_score(preds, gt, threshold=0.5) == 1.0

    def test_topk_tie_break_by_ascending_index(self):
        probs = np.array([[0.4, 0.4, 0.1]])
        preds = PredictionSet.from_probabilities(["s0"], probs)
        # ties at 0.4: index 0 outranks index 1
        assert gtd_score(preds, [0], top_k=1) == 1.0
        assert gtd_score(preds, [1], top_k=1) == 0.0
        assert gtd_score(preds, [1], top_k=2) == 1.0

    def test_topk_at_m_is_one(self):
        rng = np.random.default_rng(13)
        probs = rng.random((12, 5))
        preds = PredictionSet.from_probabilities([f"s{i}" for i in range(12)], probs)
        gt = [int(rng.integers(0, 5)) for _ in range(12)]
        assert gtd_score(preds, gt, top_k=5) == 1.0

    def test_topk_non_decreasing_in_k(self):
        rng = np.random.default_rng(14)
        probs = rng.random((15, 6))
        preds = PredictionSet.from_probabilities([f"s{i}" for i in range(15)], probs)
        gt = [int(rng.integers(0, 6)) for _ in range(15)]
        scores = [gtd_score(preds, gt, top_k=k) for k in range(1, 7)]
        assert scores == sorted(scores)

    def test_index_out_of_range(self):
        preds = PredictionSet.from_probabilities(["s0"], np.array([[0.5, 0.5]]))
        with pytest.raises(IndexOutOfRange):
            gtd_score(preds, [2], threshold=0.5)

    def test_shape_mismatch(self):
        preds = PredictionSet.from_probabilities(["s0"], np.array([[0.5, 0.5]]))
        with pytest.raises(ShapeMismatch):
            gtd_score(preds, [0, 1], threshold=0.5)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_threshold_monotonicity_property(data):
    """t' <= t implies decoded(t) subset of decoded(t'), recall and GTD ordered."""
    n = data.draw(st.integers(1, 12))
    m = data.draw(st.integers(1, 6))
    probs = np.array(
        data.draw(
            st.lists(
                st.lists(st.floats(0.001, 0.999), min_size=m, max_size=m),
                min_size=n, max_size=n,
            )
        )
    )
    truth = np.array(
        data.draw(
            st.lists(
                st.lists(st.integers(0, 1), min_size=m, max_size=m),
                min_size=n, max_size=n,
            )
        )
    )
    gt = [data.draw(st.integers(0, m - 1)) for _ in range(n)]
    for i, g in enumerate(gt):  # recall monotonicity presumes non-empty truth sets
        truth[i, g] = 1
    t_low = data.draw(st.floats(0.05, 0.5))
    t_high = data.draw(st.floats(0.5, 0.95))
    preds = PredictionSet.from_probabilities([f"s{i}" for i in range(n)], probs)

    low_bits = binarize_predictions(preds, t_low)
    high_bits = binarize_predictions(preds, t_high)
    assert ((high_bits == 1) <= (low_bits == 1)).all()

    _, recall_low, _ = samples_prf(low_bits, truth)
    _, recall_high, _ = samples_prf(high_bits, truth)
    assert recall_low >= recall_high - 1e-12

    assert gtd_score(preds, gt, threshold=t_low) >= gtd_score(preds, gt, threshold=t_high)
