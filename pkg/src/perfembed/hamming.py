"""The q-ary Hamming code of length n = (q^m - 1)/(q - 1).

The check matrix is never stored separately: column alpha is the point
alpha itself, taken in :class:`~perfembed.projgeom.PointOrdering` order.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import combinations
from typing import NamedTuple

import numpy as np

from . import kernels
from .exceptions import CapExceededError
from .gf import FieldSpec
from .linalg import null_space
from .projgeom import (
    ProjPoint,
    all_lines,
    as_field,
    enumerate_points,
    lines_through_point,
    normalize,
)
from .words import as_word, as_words, place_values

DEFAULT_CAP = 2_000_000


class DecodeResult(NamedTuple):
    codeword: np.ndarray
    error_position: ProjPoint | None
    error_value: int | None


class HammingCode:
    """H_m over GF(q): all words whose syndrome ``sum_alpha c_alpha * alpha`` vanishes."""

    def __init__(self, field: FieldSpec | int, m: int):
        self.field = as_field(field)
        self.ordering = enumerate_points(self.field, m)
        self.m = m
        self.n = self.ordering.n

    def __repr__(self) -> str:
        return f"HammingCode(q={self.q}, m={self.m}, n={self.n})"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def points(self) -> np.ndarray:
        return self.ordering.points

    def unit(self, delta, value: int = 1) -> np.ndarray:
        """``value`` times the unit word at the coordinate indexed by ``delta``."""
        e = np.zeros(self.n, dtype=np.int64)
        e[self.ordering.index_of(delta)] = value
        return e

    def bar(self, alpha) -> np.ndarray:
        """Embed an m-tuple as ``(alpha, 0^{n-m})``."""
        a = as_word(alpha, self.q, self.m)
        out = np.zeros(self.n, dtype=np.int64)
        out[: self.m] = a
        return out

    # syndromes -----------------------------------------------------------

    def syndrome(self, w) -> np.ndarray:
        """Syndrome of one word (1-D in, 1-D out) or of a batch of words."""
        single = np.ndim(w) == 1
        ws = as_words(w, self.q, self.n)
        add_t, mul_t, _ = self.field.kernel_tables()
        s = kernels.matmul(ws, self.points, self.q, add_t, mul_t)
        return s[0] if single else s

    def syndrome_code(self, s) -> np.ndarray | int:
        """Integer code of a syndrome tuple (lexicographic rank in F^m)."""
        s = np.asarray(s, dtype=np.int64)
        out = s @ place_values(self.q, self.m)
        return int(out) if s.ndim == 1 else out

    def contains(self, w):
        s = self.syndrome(w)
        return not s.any() if s.ndim == 1 else ~s.any(axis=1)

    def decode(self, w) -> DecodeResult:
        """Correct at most one error; every word is within distance 1 of H_m."""
        w = as_word(w, self.q, self.n)
        s = self.syndrome(w)
        if not s.any():
            return DecodeResult(w.copy(), None, None)
        lam = int(s[np.nonzero(s)[0][0]])
        delta = normalize(self.field, s)
        i = self.ordering.index_of(delta)
        c = w.copy()
        c[i] = self.field.sub(int(c[i]), lam)
        return DecodeResult(c, delta, lam)

    # codewords -----------------------------------------------------------

    @cached_property
    def generator(self) -> np.ndarray:
        """Reduced echelon basis of H_m, shape (n - m, n)."""
        return null_space(self.field, self.points.T)

    @property
    def dimension(self) -> int:
        return self.n - self.m

    def enumerate_codewords(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        size = self.q**self.dimension
        if size > cap:
            raise CapExceededError(f"|H_m| = {self.q}^{self.dimension} exceeds cap {cap}")
        add_t, mul_t, _ = self.field.kernel_tables()
        return kernels.span_elements(self.generator, self.q, add_t, mul_t)

    # weight-3 codewords ------------------------------------------------

    def _collinear_kernel(self, idx) -> np.ndarray:
        ker = null_space(self.field, self.points[list(idx)].T)
        assert ker.shape[0] == 1, "three collinear points span a plane"
        return ker[0]

    @cached_property
    def _triples(self) -> np.ndarray:
        f = self.field
        rows = []
        for line in all_lines(self.ordering):
            for trio in combinations(line.indices, 3):
                coef = self._collinear_kernel(trio)
                for lam in f.nonzero:
                    w = np.zeros(self.n, dtype=np.int64)
                    w[list(trio)] = f.vmul(lam, coef)
                    rows.append(w)
        return np.array(rows, dtype=np.int64).reshape(-1, self.n)

    def triples(self) -> np.ndarray:
        """All weight-3 codewords, one per row, built line by line."""
        return self._triples.copy()

    def triples_through(self, delta) -> np.ndarray:
        """Weight-3 codewords with value 1 at coordinate ``delta``."""
        f = self.field
        i0 = self.ordering.index_of(delta)
        rows = []
        for line in lines_through_point(self.ordering, delta):
            others = [i for i in line.indices if i != i0]
            for b, c in combinations(others, 2):
                trio = (i0, b, c)
                coef = self._collinear_kernel(trio)
                coef = f.vmul(f.inv(int(coef[0])), coef)
                w = np.zeros(self.n, dtype=np.int64)
                w[list(trio)] = coef
                rows.append(w)
        return np.array(rows, dtype=np.int64).reshape(-1, self.n)


@lru_cache(maxsize=None)
def _hamming_code(field: FieldSpec, m: int) -> HammingCode:
    return HammingCode(field, m)


def hamming_code(field: FieldSpec | int, m: int) -> HammingCode:
    """Shared instance per (field, m), so per-code caches are reused."""
    return _hamming_code(as_field(field), m)
