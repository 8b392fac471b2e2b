"""Embedding a 1-code into a 1-perfect code by switching components.

For a 1-code C in F^(m-1), every x in C gives a point delta = (1, x). The
perfect code P(C) is the Hamming code with each component
``R_delta + bar(delta) - e_delta`` swapped out for ``R_delta + bar(delta)``.
Shortening P(C) on the prefix ``(1, x)`` and zero tail returns C.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .components import SubspaceBasis, component_basis, cosets_disjoint
from .exceptions import CapExceededError, NotAOneCodeError
from .gf import FieldSpec
from .hamming import DEFAULT_CAP, HammingCode, hamming_code
from .projgeom import ProjPoint, as_field
from .verify import is_one_code
from .words import as_words, words_from_indices


@dataclass(frozen=True, eq=False)
class EmbeddingSpec:
    code: HammingCode
    words: tuple[tuple[int, ...], ...]  # C, lexicographically sorted
    deltas: tuple[ProjPoint, ...]
    bases: tuple[SubspaceBasis, ...]
    removed_reps: np.ndarray  # row j: bar(delta_j) - e_{delta_j}
    added_reps: np.ndarray  # row j: bar(delta_j)
    slot: np.ndarray  # syndrome code -> j, or -1

    @property
    def field(self) -> FieldSpec:
        return self.code.field

    @property
    def q(self) -> int:
        return self.code.q

    @property
    def m(self) -> int:
        return self.code.m

    @property
    def n(self) -> int:
        return self.code.n

    def __repr__(self) -> str:
        return f"EmbeddingSpec(q={self.q}, m={self.m}, n={self.n}, |C|={len(self.words)})"

    def contains(self, w):
        return embedded_contains(self, w)


def build_embedding(f: FieldSpec | int, code, m: int, check: bool = True) -> EmbeddingSpec:
    """Prepare P(C) for the 1-code ``code`` of length m - 1.

    With ``check`` the pairwise disjointness of the removed components is
    re-verified algebraically.
    """
    f = as_field(f)
    words = sorted({tuple(int(x) for x in w) for w in code})
    if words:
        as_words(np.array(words, dtype=np.int64), f.q, m - 1)
    report = is_one_code(words)
    if not report:
        a, b = report.witness
        raise NotAOneCodeError(f"not a 1-code: {a} and {b} are at {report.message}", report.witness)
    h = hamming_code(f, m)
    deltas = tuple((1, *w) for w in words)
    bases = tuple(component_basis(h, d) for d in deltas)
    added = np.array([h.bar(d) for d in deltas], dtype=np.int64).reshape(-1, h.n)
    removed = added.copy()
    for j, d in enumerate(deltas):
        i = h.ordering.index_of(d)
        removed[j, i] = f.sub(int(removed[j, i]), 1)
    slot = np.full(f.q**m, -1, dtype=np.int64)
    for j, d in enumerate(deltas):
        slot[h.syndrome_code(np.array(d))] = j
    if check:
        for a in range(len(deltas)):
            for b in range(a + 1, len(deltas)):
                if not cosets_disjoint(deltas[a], removed[a], deltas[b], removed[b], h):
                    raise AssertionError(f"components for {deltas[a]} and {deltas[b]} intersect")
    return EmbeddingSpec(h, tuple(words), deltas, bases, removed, added, slot)


def embedded_contains(spec: EmbeddingSpec, w):
    """Membership in P(C), dispatched on the syndrome.

    Removed components lie in H_m (syndrome 0); the added component for
    delta has syndrome delta. Any other syndrome means "not a member".
    """
    single = np.ndim(w) == 1
    ws = as_words(w, spec.q, spec.n)
    codes = spec.code.syndrome_code(spec.code.syndrome(ws))
    out = np.zeros(ws.shape[0], dtype=bool)
    zero = np.nonzero(codes == 0)[0]
    if zero.size:
        keep = np.ones(zero.size, dtype=bool)
        for basis, rep in zip(spec.bases, spec.removed_reps):
            keep &= ~basis.contains(ws[zero], shift=rep)
        out[zero] = keep
    slots = spec.slot[codes]
    for j, (basis, rep) in enumerate(zip(spec.bases, spec.added_reps)):
        sel = np.nonzero(slots == j)[0]
        if sel.size:
            out[sel] = basis.contains(ws[sel], shift=rep)
    return bool(out[0]) if single else out


def enumerate_embedded(spec: EmbeddingSpec, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All words of P(C): surviving Hamming codewords, then each added component."""
    f = spec.field
    size = spec.q**spec.code.dimension
    if size > cap:
        raise CapExceededError(f"|P(C)| = {spec.q}^{spec.code.dimension} exceeds cap {cap}")
    cw = spec.code.enumerate_codewords(cap)
    keep = np.ones(cw.shape[0], dtype=bool)
    for basis, rep in zip(spec.bases, spec.removed_reps):
        keep &= ~basis.contains(cw, shift=rep)
    parts = [cw[keep]]
    for basis, rep in zip(spec.bases, spec.added_reps):
        parts.append(f.vadd(basis.elements(cap), rep[None, :]))
    return np.vstack(parts)


def shortening_words(q: int, m: int, n: int) -> np.ndarray:
    """``(1, x, 0^(n-m))`` for every x in F^(m-1), in lexicographic order of x."""
    xs = words_from_indices(np.arange(q ** (m - 1)), q, m - 1)
    ws = np.zeros((xs.shape[0], n), dtype=np.int64)
    ws[:, 0] = 1
    ws[:, 1:m] = xs
    return ws


def shorten(spec: EmbeddingSpec) -> set[tuple[int, ...]]:
    """``{x : (1, x, 0^(n-m)) in P(C)}``, which recovers C."""
    ws = shortening_words(spec.q, spec.m, spec.n)
    hit = embedded_contains(spec, ws)
    return {tuple(int(v) for v in row[1 : spec.m]) for row in ws[hit]}
