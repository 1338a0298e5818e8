"""Pure-Python n-gram hashing kernel.

Reference implementation of the hot loop: FNV-1a (64-bit) over salted token
bytes, unigram and bigram counts accumulated into a power-of-two bucket array.
The compiled twin in _hash_cy.pyx must produce bit-identical output; keep the
two in lockstep.
"""

from __future__ import annotations

import numpy as np

FNV_OFFSET = 0xCBF29CE484222325
FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1

# joins the two tokens of a bigram before hashing; never appears in a token
BIGRAM_SEP = 0x1F


def _fnv1a(state: int, data: bytes) -> int:
    for byte in data:
        state = ((state ^ byte) * FNV_PRIME) & _MASK64
    return state


def accumulate_ngrams(tokens: list[str], dim: int, salt: int) -> np.ndarray:
    """Unigram+bigram bucket counts for a token sequence.

    ``dim`` must be a power of two so the bucket index is a mask of the hash.
    """
    counts = np.zeros(dim, dtype=np.float64)
    mask = dim - 1
    base = _fnv1a(FNV_OFFSET, int(salt).to_bytes(8, "little"))
    prev_state = -1
    for token in tokens:
        state = _fnv1a(base, token.encode("utf-8"))
        counts[state & mask] += 1.0
        if prev_state >= 0:
            bigram = _fnv1a(
                ((prev_state ^ BIGRAM_SEP) * FNV_PRIME) & _MASK64,
                token.encode("utf-8"),
            )
            counts[bigram & mask] += 1.0
        prev_state = state
    return counts
