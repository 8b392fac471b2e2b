"""Linear delta-components of the Hamming code and the relations they satisfy.

The linear delta-component R_delta is the span of the weight-3 codewords
that take value 1 at coordinate delta. Cosets of R_delta inside H_m are
the pieces that get switched to build new perfect codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .exceptions import CapExceededError, PreconditionError
from .gf import FieldSpec
from .hamming import DEFAULT_CAP, HammingCode
from .linalg import null_space, rref
from .projgeom import Line, Plane, ProjPoint
from .words import as_word, as_words

_EMPTY_PIVOTS = np.zeros(0, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class SubspaceBasis:
    """Reduced row-echelon basis of a subspace of F^n."""

    field: FieldSpec
    n: int
    rows: np.ndarray
    pivots: tuple[int, ...]

    @classmethod
    def from_rows(cls, field: FieldSpec, rows, n: int | None = None) -> SubspaceBasis:
        rows = np.asarray(rows, dtype=np.int64)
        if n is None:
            n = rows.shape[-1]
        rows = rows.reshape(-1, n)
        if rows.shape[0] == 0:
            return cls(field, n, rows, ())
        red, piv = rref(field, rows)
        return cls(field, n, red, piv)

    @property
    def dim(self) -> int:
        return self.rows.shape[0]

    def __repr__(self) -> str:
        return f"SubspaceBasis(q={self.field.q}, n={self.n}, dim={self.dim})"

    def _pivot_array(self) -> np.ndarray:
        return np.array(self.pivots, dtype=np.int64) if self.pivots else _EMPTY_PIVOTS

    def contains(self, w, shift=None):
        """Membership of ``w - shift`` in the row space; batch-aware."""
        single = np.ndim(w) == 1
        ws = as_words(w, self.field.q, self.n)
        if shift is None:
            neg_shift = np.zeros(self.n, dtype=np.int64)
        else:
            neg_shift = self.field.vneg(as_word(shift, self.field.q, self.n))
        add_t, mul_t, neg_t = self.field.kernel_tables()
        out = kernels.in_span(ws, neg_shift, self.rows, self._pivot_array(), self.field.q, add_t, mul_t, neg_t)
        return bool(out[0]) if single else out

    def elements(self, cap: int = DEFAULT_CAP) -> np.ndarray:
        size = self.field.q**self.dim
        if size > cap:
            raise CapExceededError(f"span of size {self.field.q}^{self.dim} exceeds cap {cap}")
        add_t, mul_t, _ = self.field.kernel_tables()
        return kernels.span_elements(self.rows, self.field.q, add_t, mul_t)

    def random_elements(self, rng: np.random.Generator, count: int) -> np.ndarray:
        coef = rng.integers(0, self.field.q, size=(count, self.dim), dtype=np.int64)
        add_t, mul_t, _ = self.field.kernel_tables()
        return kernels.matmul(coef, self.rows, self.field.q, add_t, mul_t)

    def same_space(self, other: SubspaceBasis) -> bool:
        return self.pivots == other.pivots and np.array_equal(self.rows, other.rows)


@dataclass(frozen=True, eq=False)
class Coset:
    basis: SubspaceBasis
    rep: np.ndarray

    def contains(self, w):
        return self.basis.contains(w, shift=self.rep)


@dataclass(frozen=True, eq=False)
class LinearFunctional:
    """``l(alpha) = sum_i coeffs_i * alpha_i`` on F^m."""

    field: FieldSpec
    coeffs: tuple[int, ...]

    def __call__(self, alpha) -> int:
        return self.field.dot(self.coeffs, alpha)

    def values(self, points: np.ndarray) -> np.ndarray:
        add_t, mul_t, _ = self.field.kernel_tables()
        col = np.array(self.coeffs, dtype=np.int64)[:, None]
        return kernels.matmul(np.asarray(points, dtype=np.int64), col, self.field.q, add_t, mul_t)[:, 0]


def annihilator(field: FieldSpec, points) -> list[LinearFunctional]:
    """A basis of the functionals vanishing on every given point."""
    pts = np.asarray(points, dtype=np.int64)
    basis = null_space(field, pts)
    return [LinearFunctional(field, tuple(int(x) for x in row)) for row in basis]


@lru_cache(maxsize=None)
def _component_basis(h: HammingCode, delta: ProjPoint) -> SubspaceBasis:
    return SubspaceBasis.from_rows(h.field, h.triples_through(delta), h.n)


def component_basis(h: HammingCode, delta) -> SubspaceBasis:
    """Echelon basis of R_delta (cached per code and point)."""
    delta = tuple(int(x) for x in delta)
    h.ordering.index_of(delta)
    return _component_basis(h, delta)


def subspace_member(b: SubspaceBasis, w):
    return b.contains(w)


def coset_member(c: Coset, w):
    return c.contains(w)


def joint_span(b1: SubspaceBasis, b2: SubspaceBasis) -> SubspaceBasis:
    if b1.field is not b2.field or b1.n != b2.n:
        raise ValueError("subspaces live in different spaces")
    return SubspaceBasis.from_rows(b1.field, np.vstack([b1.rows, b2.rows]), b1.n)


def cosets_disjoint(delta, rep1, kappa, rep2, h: HammingCode) -> bool:
    """Whether R_delta + rep1 and R_kappa + rep2 have empty intersection.

    The cosets meet exactly when rep1 - rep2 lies in R_delta + R_kappa.
    """
    r1 = as_word(rep1, h.q, h.n)
    r2 = as_word(rep2, h.q, h.n)
    span = joint_span(component_basis(h, delta), component_basis(h, kappa))
    return not span.contains(h.field.vsub(r1, r2))


def relation_vector(h: HammingCode, l: LinearFunctional, indices) -> np.ndarray:
    """Word v with ``v_alpha = l(alpha)`` on ``indices`` and 0 elsewhere.

    The relation sum over those points of ``c_alpha * l(alpha)`` is then
    the inner product of c with v.
    """
    v = np.zeros(h.n, dtype=np.int64)
    idx = list(indices)
    v[idx] = l.values(h.points[idx])
    return v


def _relation_sum(h: HammingCode, c, l: LinearFunctional, indices) -> int:
    c = as_word(c, h.q, h.n)
    return h.field.dot(c, relation_vector(h, l, indices))


def check_line_relation(h: HammingCode, delta, c, l: LinearFunctional, line: Line) -> bool:
    """Whether ``sum_{alpha in line} c_alpha l(alpha)`` vanishes.

    Requires ``l(delta) = 0`` and delta on the line.
    """
    i = h.ordering.index_of(delta)
    if i not in line:
        raise PreconditionError(f"{tuple(delta)} is not on the line")
    if l(delta) != 0:
        raise PreconditionError("functional does not vanish on delta")
    return _relation_sum(h, c, l, line.indices) == 0


def check_plane_relation(h: HammingCode, delta, kappa, c, l: LinearFunctional, plane: Plane) -> bool:
    """Whether ``sum_{alpha in plane} c_alpha l(alpha)`` vanishes.

    Requires ``l(delta) = l(kappa) = 0`` and both points on the plane.
    """
    for p in (delta, kappa):
        if h.ordering.index_of(p) not in plane:
            raise PreconditionError(f"{tuple(p)} is not on the plane")
        if l(p) != 0:
            raise PreconditionError(f"functional does not vanish on {tuple(p)}")
    return _relation_sum(h, c, l, plane.indices) == 0


def relations_hold(h: HammingCode, words, vectors: np.ndarray) -> np.ndarray:
    """Batch form: True where every relation vector is orthogonal to the word."""
    ws = as_words(words, h.q, h.n)
    if vectors.shape[0] == 0:
        return np.ones(ws.shape[0], dtype=bool)
    add_t, mul_t, _ = h.field.kernel_tables()
    return ~kernels.matmul(ws, vectors.T.copy(), h.q, add_t, mul_t).any(axis=1)


def neighborhood(words, q: int, n: int, cap: int = DEFAULT_CAP) -> set[tuple[int, ...]]:
    """All words within Hamming distance 1 of the given set."""
    ws = np.asarray(list(words), dtype=np.int64).reshape(-1, n)
    if ws.shape[0] == 0:
        return set()
    if ws.shape[0] * (n * (q - 1) + 1) > cap:
        raise CapExceededError("neighborhood too large")
    as_words(ws, q, n)
    out = set(map(tuple, ws.tolist()))
    for i in range(n):
        for d in range(1, q):
            moved = ws.copy()
            moved[:, i] = (moved[:, i] + d) % q  # any relabelling of the other q-1 symbols works
            out.update(map(tuple, moved.tolist()))
    return out


def switched_code_member(h: HammingCode, delta, mu: int, w):
    """Membership in ``(H_m minus R_delta) union (R_delta + mu e_delta)``."""
    r = component_basis(h, delta)
    in_h = h.contains(w)
    in_r = r.contains(w)
    in_shift = r.contains(w, shift=h.unit(delta, mu))
    return (in_h & ~in_r) | in_shift if np.ndim(w) > 1 else bool((in_h and not in_r) or in_shift)
