"""Deterministic random-stream derivation.

Every randomized pass in the toolkit derives its generator from a user seed
plus a stable label path (e.g. ``(seed, "typos", sample_id)``). Derivation goes
through SHA-256 of a canonical encoding, so streams are independent of each
other, portable across platforms, and identical whether samples are processed
serially or in parallel.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(seed: int, *parts: str | int) -> int:
    """Collapse (seed, *parts) into a 64-bit child seed via SHA-256."""
    h = hashlib.sha256()
    h.update(int(seed).to_bytes(8, "little", signed=True))
    for part in parts:
        if isinstance(part, int):
            h.update(b"i")
            h.update(part.to_bytes(8, "little", signed=True))
        else:
            data = str(part).encode("utf-8")
            h.update(b"s")
            h.update(len(data).to_bytes(4, "little"))
            h.update(data)
    return int.from_bytes(h.digest()[:8], "little")


def derive_rng(seed: int, *parts: str | int) -> np.random.Generator:
    """Generator seeded from (seed, *parts); same arguments, same stream."""
    return np.random.default_rng(derive_seed(seed, *parts))
