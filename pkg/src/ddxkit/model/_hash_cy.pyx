# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _hash_py.accumulate_ngrams; outputs must be identical."""

import numpy as np

cimport cython
from libc.stdint cimport uint8_t, uint64_t

cdef uint64_t FNV_OFFSET = 0xCBF29CE484222325UL
cdef uint64_t FNV_PRIME = 0x100000001B3UL
cdef uint64_t BIGRAM_SEP = 0x1FUL


cdef inline uint64_t _fnv1a_bytes(uint64_t state, const uint8_t* data, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        state = (state ^ <uint64_t>data[i]) * FNV_PRIME
    return state


def accumulate_ngrams(list tokens, int dim, salt):
    """Unigram+bigram bucket counts; dim must be a power of two."""
    counts = np.zeros(dim, dtype=np.float64)
    cdef double[::1] view = counts
    cdef uint64_t mask = <uint64_t>(dim - 1)
    cdef bytes salt_bytes = int(salt).to_bytes(8, "little")
    cdef uint64_t base = _fnv1a_bytes(
        FNV_OFFSET, <const uint8_t*><const char*>salt_bytes, 8
    )
    cdef uint64_t state, bigram
    cdef uint64_t prev_state = 0
    cdef bint have_prev = False
    cdef bytes data
    cdef const uint8_t* ptr
    cdef Py_ssize_t n

    for token in tokens:
        data = (<str>token).encode("utf-8")
        ptr = <const uint8_t*><const char*>data
        n = len(data)
        state = _fnv1a_bytes(base, ptr, n)
        view[<Py_ssize_t>(state & mask)] += 1.0
        if have_prev:
            bigram = _fnv1a_bytes((prev_state ^ BIGRAM_SEP) * FNV_PRIME, ptr, n)
            view[<Py_ssize_t>(bigram & mask)] += 1.0
        prev_state = state
        have_prev = True
    return counts
