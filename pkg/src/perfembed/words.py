"""Word arrays: validation, lexicographic indexing, distances.

A word of length n over GF(q) is a row of int64 symbols. Its index is the
base-q number it spells with the first symbol most significant, so index
order is lexicographic order.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np


def as_word(w, q: int, n: int | None = None) -> np.ndarray:
    """Validate one word and return it as a 1-D int64 array."""
    arr = np.asarray(w, dtype=np.int64)
    if arr.ndim != 1:
        raise ValueError(f"expected a single word, got shape {arr.shape}")
    _check(arr, q, n)
    return arr


def as_words(ws, q: int, n: int | None = None) -> np.ndarray:
    """Validate a batch and return it as a 2-D int64 array (one word per row)."""
    arr = np.asarray(ws, dtype=np.int64)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2:
        raise ValueError(f"expected words as rows of a matrix, got shape {arr.shape}")
    _check(arr, q, n)
    return arr


def _check(arr: np.ndarray, q: int, n: int | None) -> None:
    if n is not None and arr.shape[-1] != n:
        raise ValueError(f"word length {arr.shape[-1]} != {n}")
    if arr.size and (arr.min() < 0 or arr.max() >= q):
        raise ValueError(f"symbol out of range 0..{q - 1}")


def place_values(q: int, n: int) -> np.ndarray:
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


def word_index(ws, q: int) -> np.ndarray | int:
    arr = np.asarray(ws, dtype=np.int64)
    idx = arr @ place_values(q, arr.shape[-1])
    return int(idx) if arr.ndim == 1 else idx


def words_from_indices(idx, q: int, n: int) -> np.ndarray:
    idx = np.asarray(idx, dtype=np.int64)
    out = np.empty(idx.shape + (n,), dtype=np.int64)
    rem = idx.copy()
    for i in range(n - 1, -1, -1):
        out[..., i] = rem % q
        rem //= q
    return out


def iter_space(q: int, n: int, chunk: int = 1 << 18):
    """Yield ``(start, words)`` blocks covering F^n in index order."""
    total = q**n
    for start in range(0, total, chunk):
        stop = min(total, start + chunk)
        yield start, words_from_indices(np.arange(start, stop, dtype=np.int64), q, n)


def hamming_distance(a, b) -> int:
    return int(np.count_nonzero(np.asarray(a) != np.asarray(b)))


def to_tuples(ws) -> list[tuple[int, ...]]:
    return [tuple(int(x) for x in row) for row in np.asarray(ws).reshape(-1, np.asarray(ws).shape[-1])]


def lex_sorted(ws: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(tuple(int(x) for x in w) for w in ws)
