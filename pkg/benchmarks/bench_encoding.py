#!/usr/bin/env python3
"""Benchmark the compiled hashing kernel against the pure-Python fallback.

Builds a synthetic corpus of report-like texts, checks both kernels produce
identical vectors, then times repeated encodes of the whole corpus.

Usage: python benchmarks/bench_encoding.py [--texts 2000] [--repeats 3]
"""

import argparse
import time

import numpy as np

from ddxkit.model import _hash_py
from ddxkit.model.encoder import DEFAULT_DIM, HASH_SALT, tokenize
from ddxkit.rng import derive_rng

try:
    from ddxkit.model import _hash_cy
except ImportError:
    _hash_cy = None

WORDS = (
    "i have a fever cough pain in my chest forehead knee short of breath "
    "nausea history smoke reflux tired chills sneezing wheezing throat "
    "symptoms worse with exercise meals lying down age sex male female"
).split()


def synth_texts(n: int) -> list[list[str]]:
    rng = derive_rng(0, "bench")
    texts = []
    for _ in range(n):
        length = int(rng.integers(40, 120))
        words = [WORDS[int(i)] for i in rng.integers(0, len(WORDS), size=length)]
        texts.append(tokenize(" ".join(words)))
    return texts


def run(kernel, token_lists, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for tokens in token_lists:
            kernel.accumulate_ngrams(tokens, DEFAULT_DIM, HASH_SALT)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--texts", type=int, default=2000)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    token_lists = synth_texts(args.texts)
    total_tokens = sum(len(t) for t in token_lists)
    print(f"{args.texts} texts, {total_tokens} tokens, dim={DEFAULT_DIM}")

    if _hash_cy is not None:
        for tokens in token_lists[:50]:
            a = _hash_py.accumulate_ngrams(tokens, DEFAULT_DIM, HASH_SALT)
            b = _hash_cy.accumulate_ngrams(tokens, DEFAULT_DIM, HASH_SALT)
            assert np.array_equal(a, b), "kernels disagree"
        print("correctness: compiled output identical to pure Python")

    py_time = run(_hash_py, token_lists, args.repeats)
    print(f"pure python : {py_time:8.3f} s  ({total_tokens / py_time / 1e6:6.2f} M tokens/s)")
    if _hash_cy is None:
        print("compiled    : not built (pip install -e . builds it when cython is present)")
        return
    cy_time = run(_hash_cy, token_lists, args.repeats)
    print(f"compiled    : {cy_time:8.3f} s  ({total_tokens / cy_time / 1e6:6.2f} M tokens/s)")
    print(f"speedup     : {py_time / cy_time:8.1f}x")


if __name__ == "__main__":
    main()
