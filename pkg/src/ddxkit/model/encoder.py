"""Deterministic hashed n-gram text encoder.

Stands in for a learned sentence encoder: lowercase word unigrams and bigrams
are hashed (salted 64-bit FNV-1a) into a power-of-two number of buckets and
the count vector is L2-normalized. The kernel is compiled (Cython) when the
extension built; set DDXKIT_PURE_PYTHON=1 to force the pure-Python fallback.
"""

from __future__ import annotations

import os
import re

import numpy as np

from ..errors import ShapeMismatch
from . import _hash_py

try:  # compiled kernel is optional
    from . import _hash_cy
except ImportError:  # pragma: no cover - depends on build environment
    _hash_cy = None

if _hash_cy is not None and not os.environ.get("DDXKIT_PURE_PYTHON"):
    _kernel = _hash_cy
else:
    _kernel = _hash_py

HAS_COMPILED_KERNEL = _hash_cy is not None
KERNEL_NAME = "cython" if _kernel is not _hash_py else "python"

DEFAULT_DIM = 4096
HASH_SALT = 0x9E3779B97F4A7C15  # fixed; checkpoints record it

_TOKEN_RE = re.compile(r"[a-z0-9]+")


def tokenize(text: str) -> list[str]:
    return _TOKEN_RE.findall(text.lower())


def encode_features(text: str, dim: int = DEFAULT_DIM, salt: int = HASH_SALT) -> np.ndarray:
    """L2-normalized hashed n-gram features; the zero vector for empty text."""
    if dim <= 0 or dim & (dim - 1):
        raise ShapeMismatch(f"feature dimension must be a power of two, got {dim}")
    counts = _kernel.accumulate_ngrams(tokenize(text), dim, salt)
    norm = float(np.linalg.norm(counts))
    if norm > 0.0:
        counts /= norm
    return counts


def encode_batch(
    texts: list[str], dim: int = DEFAULT_DIM, salt: int = HASH_SALT
) -> np.ndarray:
    out = np.zeros((len(texts), dim), dtype=np.float64)
    for i, text in enumerate(texts):
        out[i] = encode_features(text, dim, salt)
    return out
