"""Embedding a partition of F^s into 1-codes in a partition of F^n into 1-perfect codes.

With m = s + 1, the cosets H_alpha of the Hamming code (alpha in F^m) tile
F^n. For each input code C_j with anchor y_j, the coset H_{(0, y_j)} is
replaced by ``P_j = P(C_j - y_j) + bar((0, y_j))``. P_j takes one component
from each coset H_{(1, x)} with x in C_j; that coset, with the component
removed and P_j's discarded component put in its place, is the part O_x.
All other cosets H_alpha stay as they are.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .components import SubspaceBasis
from .embed import EmbeddingSpec, build_embedding, embedded_contains, enumerate_embedded
from .exceptions import CapExceededError, NotAOneCodeError, NotAPartitionError
from .gf import FieldSpec
from .hamming import DEFAULT_CAP, HammingCode, hamming_code
from .projgeom import as_field
from .verify import is_one_code
from .words import as_words, place_values, words_from_indices


@dataclass(frozen=True, order=True)
class PartLabel:
    """``P`` with a 1-based code index, ``O`` with x in F^s, or ``H`` with alpha in F^m."""

    kind: str
    payload: int | tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "P":
            return f"P{self.payload}"
        return self.kind + ".".join(str(v) for v in self.payload)

    @classmethod
    def parse(cls, text: str) -> PartLabel:
        text = text.strip()
        if len(text) < 2 or text[0] not in "POH":
            raise ValueError(f"bad part label {text!r}")
        body = text[1:]
        try:
            if text[0] == "P":
                return cls("P", int(body))
            return cls(text[0], tuple(int(v) for v in body.split(".")))
        except ValueError:
            raise ValueError(f"bad part label {text!r}") from None


class _Swap(NamedTuple):
    """Data for one x in F^s: its owner j and the component both parts share."""

    j: int  # 0-based
    delta: tuple[int, ...]
    basis: SubspaceBasis
    p_shift: np.ndarray  # bar(alpha_j) + bar(delta): P_j's component, syndrome (1, x)
    o_shift: np.ndarray  # bar(alpha_j) + bar(delta) - e_delta: O_x's component, syndrome alpha_j


@dataclass(frozen=True, eq=False)
class PartitionSpec:
    field: FieldSpec
    s: int
    code: HammingCode
    codes: tuple[tuple[tuple[int, ...], ...], ...]
    anchors: tuple[tuple[int, ...], ...]
    embeddings: tuple[EmbeddingSpec, ...]
    labels: tuple[PartLabel, ...]
    swaps: tuple[_Swap, ...] = field(repr=False)  # indexed by x's lexicographic rank
    label_pos: dict = field(repr=False)
    h_pos: np.ndarray = field(repr=False)  # syndrome code -> label position of H_alpha, -1

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def m(self) -> int:
        return self.s + 1

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def k(self) -> int:
        return len(self.codes)

    def alpha(self, j: int) -> tuple[int, ...]:
        """Anchor syndrome ``(0, y_j)`` for 0-based j."""
        return (0, *self.anchors[j])

    def alpha_bar(self, j: int) -> np.ndarray:
        return self.code.bar(self.alpha(j))

    def __repr__(self) -> str:
        return f"PartitionSpec(q={self.q}, s={self.s}, n={self.n}, k={self.k}, parts={len(self.labels)})"


def _x_rank(q: int, x) -> int:
    return int(np.asarray(x, dtype=np.int64) @ place_values(q, len(x)))


def build_partition(f: FieldSpec | int, codes, s: int, check: bool = True) -> PartitionSpec:
    f = as_field(f)
    q = f.q
    norm_codes = []
    cover = np.full(q**s, -1, dtype=np.int64)
    for j, c in enumerate(codes):
        words = sorted({tuple(int(x) for x in w) for w in c})
        if not words:
            raise NotAPartitionError(f"code {j + 1} is empty")
        as_words(np.array(words, dtype=np.int64), q, s)
        for w in words:
            r = _x_rank(q, w)
            if cover[r] >= 0:
                raise NotAPartitionError(
                    f"{w} is in codes {cover[r] + 1} and {j + 1}", witness=w)
            cover[r] = j
        report = is_one_code(words)
        if not report:
            raise NotAOneCodeError(
                f"code {j + 1} is not a 1-code: {report.witness} at {report.message}", report.witness)
        norm_codes.append(tuple(words))
    missing = np.nonzero(cover < 0)[0]
    if missing.size:
        w = tuple(int(v) for v in words_from_indices(missing[0], q, s))
        raise NotAPartitionError(f"{w} is not covered", witness=w)

    m = s + 1
    h = hamming_code(f, m)
    anchors = tuple(c[0] for c in norm_codes)  # lexicographic minimum
    embeddings = []
    for c, y in zip(norm_codes, anchors):
        shifted = [tuple(int(v) for v in f.vsub(np.array(x), np.array(y))) for x in c]
        embeddings.append(build_embedding(f, shifted, m, check=check))

    labels = [PartLabel("P", j + 1) for j in range(len(norm_codes))]
    labels += [PartLabel("O", tuple(int(v) for v in x)) for x in words_from_indices(np.arange(q**s), q, s)]
    alpha_set = {(0, *y) for y in anchors}
    h_pos = np.full(q**m, -1, dtype=np.int64)
    for a in words_from_indices(np.arange(q**m), q, m):
        a = tuple(int(v) for v in a)
        if a[0] != 1 and a not in alpha_set:
            h_pos[_x_rank(q, a)] = len(labels)
            labels.append(PartLabel("H", a))
    assert len(labels) == q**m == (q - 1) * h.n + 1

    swaps = []
    for r in range(q**s):
        j = int(cover[r])
        x = words_from_indices(r, q, s)
        delta = (1, *(int(v) for v in f.vsub(x, np.array(anchors[j]))))
        e = embeddings[j]
        t = e.deltas.index(delta)
        p_shift = f.vadd(h.bar((0, *anchors[j])), e.added_reps[t])
        o_shift = f.vadd(h.bar((0, *anchors[j])), e.removed_reps[t])
        swaps.append(_Swap(j, delta, e.bases[t], p_shift, o_shift))

    return PartitionSpec(
        f, s, h, tuple(norm_codes), anchors, tuple(embeddings), tuple(labels),
        tuple(swaps), {lab: i for i, lab in enumerate(labels)}, h_pos,
    )


def classify_batch(spec: PartitionSpec, w) -> np.ndarray:
    """Label positions (into ``spec.labels``) for a batch of words, by syndrome dispatch."""
    q, s = spec.q, spec.s
    ws = as_words(w, q, spec.n)
    syn = spec.code.syndrome(ws)
    codes = spec.code.syndrome_code(syn)
    out = spec.h_pos[codes].copy()
    # syndrome (1, x): P_j's component or the rest of O_x
    lead1 = np.nonzero(syn[:, 0] == 1)[0]
    if lead1.size:
        xr = codes[lead1] - q**s
        order = np.argsort(xr, kind="stable")
        uniq, starts = np.unique(xr[order], return_index=True)
        bounds = list(starts[1:]) + [order.size]
        for r, lo, hi in zip(uniq, starts, bounds):
            sel = lead1[order[lo:hi]]
            sw = spec.swaps[int(r)]
            in_p = sw.basis.contains(ws[sel], shift=sw.p_shift)
            o_pos = spec.k + int(r)
            out[sel] = np.where(in_p, sw.j, o_pos)
    # syndrome alpha_j: P_j unless in a component handed to some O_x
    for j in range(spec.k):
        sel = np.nonzero(codes == _x_rank(q, spec.alpha(j)))[0]
        if not sel.size:
            continue
        out[sel] = j
        for x in spec.codes[j]:
            r = _x_rank(q, x)
            sw = spec.swaps[r]
            hit = sw.basis.contains(ws[sel], shift=sw.o_shift)
            out[sel[hit]] = spec.k + r
    return out


def classify(spec: PartitionSpec, w) -> PartLabel:
    """Label of the unique part containing one word."""
    return spec.labels[int(classify_batch(spec, np.asarray(w)[None, :])[0])]


def _label(spec: PartitionSpec, label) -> PartLabel:
    if isinstance(label, str):
        label = PartLabel.parse(label)
    elif isinstance(label, (int, np.integer)):
        label = spec.labels[int(label)]
    if label not in spec.label_pos:
        raise ValueError(f"{label} is not a part of this partition")
    return label


def part_contains(spec: PartitionSpec, label, w):
    """Direct membership in one part; batch-aware.

    ``label`` may be a :class:`PartLabel`, its text form, or a position.
    """
    label = _label(spec, label)
    single = np.ndim(w) == 1
    ws = as_words(w, spec.q, spec.n)
    f = spec.field
    if label.kind == "P":
        j = label.payload - 1
        out = embedded_contains(spec.embeddings[j], f.vsub(ws, spec.alpha_bar(j)[None, :]))
    else:
        codes = spec.code.syndrome_code(spec.code.syndrome(ws))
        if label.kind == "H":
            out = codes == _x_rank(spec.q, label.payload)
        else:
            r = _x_rank(spec.q, label.payload)
            sw = spec.swaps[r]
            out = np.zeros(ws.shape[0], dtype=bool)
            own = np.nonzero(codes == spec.q**spec.s + r)[0]
            out[own] = ~sw.basis.contains(ws[own], shift=sw.p_shift)
            moved = np.nonzero(codes == _x_rank(spec.q, spec.alpha(sw.j)))[0]
            out[moved] = sw.basis.contains(ws[moved], shift=sw.o_shift)
    return bool(out[0]) if single else out


def shorten_part(spec: PartitionSpec, j: int) -> set[tuple[int, ...]]:
    """``{x : (1, x, 0^(n-s-1)) in P_j}`` for 1-based j; recovers C_j."""
    if not 1 <= j <= spec.k:
        raise IndexError(f"part index {j} outside 1..{spec.k}")
    xs = words_from_indices(np.arange(spec.q**spec.s), spec.q, spec.s)
    ws = np.zeros((xs.shape[0], spec.n), dtype=np.int64)
    ws[:, 0] = 1
    ws[:, 1 : spec.m] = xs
    hit = part_contains(spec, PartLabel("P", j), ws)
    return {tuple(int(v) for v in x) for x in xs[hit]}


def enumerate_part(spec: PartitionSpec, label, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All words of one part, built from cosets and components."""
    label = _label(spec, label)
    f = spec.field
    if spec.q**spec.code.dimension > cap:
        raise CapExceededError(f"parts have {spec.q}^{spec.code.dimension} words, above cap {cap}")
    if label.kind == "P":
        j = label.payload - 1
        return f.vadd(enumerate_embedded(spec.embeddings[j], cap), spec.alpha_bar(j)[None, :])
    cw = spec.code.enumerate_codewords(cap)
    if label.kind == "H":
        return f.vadd(cw, spec.code.bar(label.payload)[None, :])
    sw = spec.swaps[_x_rank(spec.q, label.payload)]
    coset = f.vadd(cw, spec.code.bar((1, *label.payload))[None, :])
    kept = coset[~sw.basis.contains(coset, shift=sw.p_shift)]
    moved = f.vadd(sw.basis.elements(cap), sw.o_shift[None, :])
    return np.vstack([kept, moved])
