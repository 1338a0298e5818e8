"""Model checkpoint container.

A checkpoint is a .npz archive holding the four parameter tensors plus a JSON
metadata blob: feature dimension, hidden width, label names (ordered by label
index), hash salt, and format version. The model id is a SHA-256 over the
canonical tensor bytes and metadata, recomputed on load.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..errors import MissingFile, ShapeMismatch
from .head import HeadParams

CHECKPOINT_VERSION = 1


@dataclass
class Model:
    params: HeadParams
    dim: int
    hidden: int
    labels: list[str]  # display names ordered by label index
    salt: int
    model_id: str

    @property
    def n_labels(self) -> int:
        return len(self.labels)


def _model_id(params: HeadParams, meta: dict) -> str:
    h = hashlib.sha256()
    h.update(json.dumps(meta, sort_keys=True).encode("utf-8"))
    for key in ("W1", "b1", "W2", "b2"):
        h.update(np.ascontiguousarray(getattr(params, key), dtype=np.float64).tobytes())
    return h.hexdigest()


def save_checkpoint(
    path: str | Path,
    params: HeadParams,
    labels: list[str],
    salt: int,
    train_log: dict | None = None,
) -> str:
    """Write the checkpoint and return its model id."""
    params.validate()
    if params.n_labels != len(labels):
        raise ShapeMismatch(f"{params.n_labels} outputs vs {len(labels)} label names")
    meta = {
        "version": CHECKPOINT_VERSION,
        "dim": params.dim,
        "hidden": params.hidden,
        "labels": labels,
        "salt": salt,
        "train_log": train_log or {},
    }
    np.savez(
        path,
        W1=params.W1,
        b1=params.b1,
        W2=params.W2,
        b2=params.b2,
        meta=np.frombuffer(json.dumps(meta, sort_keys=True).encode("utf-8"), dtype=np.uint8),
    )
    return _model_id(params, meta)


def load_checkpoint(path: str | Path) -> Model:
    path = Path(path)
    if not path.is_file():
        raise MissingFile(f"checkpoint not found: {path}")
    with np.load(path) as data:
        meta = json.loads(bytes(data["meta"]).decode("utf-8"))
        params = HeadParams(
            W1=data["W1"].astype(np.float64),
            b1=data["b1"].astype(np.float64),
            W2=data["W2"].astype(np.float64),
            b2=data["b2"].astype(np.float64),
        )
    params.validate()
    if meta.get("version") != CHECKPOINT_VERSION:
        raise ShapeMismatch(f"unsupported checkpoint version {meta.get('version')!r}")
    return Model(
        params=params,
        dim=meta["dim"],
        hidden=meta["hidden"],
        labels=list(meta["labels"]),
        salt=meta["salt"],
        model_id=_model_id(params, meta),
    )
