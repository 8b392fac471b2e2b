"""Points, lines and planes of PG(m-1, q).

Points are m-tuples whose first nonzero entry is 1. A :class:`PointOrdering`
fixes the coordinate order of F^n: the m unit vectors first, then the other
points in lexicographic order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gf import FieldSpec, create_field
from .linalg import rank
from .words import place_values

ProjPoint = tuple[int, ...]


def as_field(q) -> FieldSpec:
    return q if isinstance(q, FieldSpec) else create_field(q)


def normalize(f: FieldSpec | int, v) -> ProjPoint:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    f = as_field(f)
    arr = np.asarray(v, dtype=np.int64)
    nz = np.nonzero(arr)[0]
    if nz.size == 0:
        raise ValueError("cannot normalize the zero vector")
    lam = f.inv(int(arr[nz[0]]))
    return tuple(int(x) for x in f.vmul(lam, arr))


def normalize_rows(f: FieldSpec, vs: np.ndarray) -> np.ndarray:
    """Row-wise :func:`normalize`; rows must be nonzero."""
    vs = np.asarray(vs, dtype=np.int64)
    nzmask = vs != 0
    if not nzmask.any(axis=1).all():
        raise ValueError("cannot normalize the zero vector")
    lead = vs[np.arange(vs.shape[0]), nzmask.argmax(axis=1)]
    return f.vmul(f.vinv(lead)[:, None], vs)


def is_normalized(v) -> bool:
    arr = np.asarray(v)
    nz = np.nonzero(arr)[0]
    return nz.size > 0 and arr[nz[0]] == 1


@dataclass(frozen=True, eq=False)
class PointOrdering:
    field: FieldSpec
    m: int
    points: np.ndarray  # (n, m)

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def n(self) -> int:
        return self.points.shape[0]

    def __len__(self) -> int:
        return self.n

    def point(self, i: int) -> ProjPoint:
        return tuple(int(x) for x in self.points[i])

    def index_of(self, p) -> int:
        arr = np.asarray(p, dtype=np.int64)
        if arr.shape != (self.m,) or arr.min() < 0 or arr.max() >= self.q:
            raise ValueError(f"{tuple(p)} is not a point of PG({self.m - 1},{self.q})")
        pos = int(self.indices_of(arr[None, :])[0])
        if pos < 0:
            raise ValueError(f"{tuple(int(x) for x in arr)} is not normalized")
        return pos

    def indices_of(self, pts: np.ndarray) -> np.ndarray:
        """Positions of normalized rows; -1 for rows that are not points.

        Computed from the block layout: a point with leading 1 at ``lead``
        and tail of lexicographic rank r >= 1 sits at ``offset[lead] + r - 1``.
        """
        pts = np.asarray(pts, dtype=np.int64)
        q, m = self.q, self.m
        nz = pts != 0
        lead = nz.argmax(axis=1)
        rows = np.arange(pts.shape[0])
        ok = nz.any(axis=1) & (pts[rows, lead] == 1)
        width = m - 1 - lead
        tail_rank = (pts @ place_values(q, m)) % (q**width)
        sizes = q ** np.arange(m - 1, -1, -1, dtype=np.int64) - 1  # block sizes by lead
        offset = m + np.concatenate([np.cumsum(sizes[::-1])[::-1][1:], [0]])
        pos = np.where(tail_rank == 0, lead, offset[lead] + tail_rank - 1)
        return np.where(ok, pos, -1)

    def coords(self, indices) -> list[ProjPoint]:
        return [self.point(i) for i in indices]


@dataclass(frozen=True)
class Line:
    """Sorted point positions of a line."""

    indices: tuple[int, ...]

    def __contains__(self, i) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


@dataclass(frozen=True)
class Plane:
    """Sorted point positions of a plane."""

    indices: tuple[int, ...]

    def __contains__(self, i) -> bool:
        return i in self.indices

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)


def enumerate_points(q: FieldSpec | int, m: int) -> PointOrdering:
    f = as_field(q)
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    q = f.q
    n = (q**m - 1) // (q - 1)
    points = np.zeros((n, m), dtype=np.int64)
    points[:m] = np.eye(m, dtype=np.int64)
    row = m
    # more leading zeros sorts first; within a block the tail runs in lex order
    for lead in range(m - 1, -1, -1):
        width = m - lead - 1
        count = q**width - 1  # skip the all-zero tail (a unit vector)
        if count <= 0:
            continue
        block = points[row : row + count]
        block[:, lead] = 1
        rem = np.arange(1, count + 1, dtype=np.int64)
        for i in range(m - 1, lead, -1):
            block[:, i] = rem % q
            rem //= q
        row += count
    return PointOrdering(f, m, points)


def line_through(ordering: PointOrdering, p1, p2) -> Line:
    f = ordering.field
    i1, i2 = ordering.index_of(p1), ordering.index_of(p2)
    if i1 == i2:
        raise ValueError("a line needs two distinct points")
    a = ordering.points[i1]
    b = ordering.points[i2]
    combos = f.vadd(f.vmul(np.arange(f.q)[:, None], a[None, :]), b[None, :])
    idx = ordering.indices_of(normalize_rows(f, combos))
    return Line(tuple(sorted({i1, *idx.tolist()})))


def plane_through(ordering: PointOrdering, p1, p2, p3) -> Plane:
    f = ordering.field
    idx = [ordering.index_of(p) for p in (p1, p2, p3)]
    gens = ordering.points[idx]
    if rank(f, gens) < 3:
        raise ValueError("plane needs three linearly independent points")
    qq = f.q
    coef = np.array([(a, b, c) for a in range(qq) for b in range(qq) for c in range(qq)][1:], dtype=np.int64)
    # coef @ gens over the field
    vecs = np.zeros((coef.shape[0], ordering.m), dtype=np.int64)
    for t in range(3):
        vecs = f.vadd(vecs, f.vmul(coef[:, t, None], gens[t][None, :]))
    pos = ordering.indices_of(normalize_rows(f, vecs))
    return Plane(tuple(sorted(set(pos.tolist()))))


def lines_through_point(ordering: PointOrdering, p) -> list[Line]:
    i0 = ordering.index_of(p)
    part = _partners(ordering, i0)
    keep = part.min(axis=1) == np.arange(ordering.n)
    keep[i0] = False
    return [Line(tuple(sorted({i0, *map(int, row)}))) for row in part[keep]]


def _partners(ordering: PointOrdering, i: int) -> np.ndarray:
    """Row j holds the positions of normalize(a*p_i + p_j) for a in F."""
    f = ordering.field
    pts = ordering.points
    scaled = f.vmul(np.arange(f.q)[:, None], pts[i][None, :])  # (q, m)
    combos = f.vadd(scaled[None, :, :], pts[:, None, :])  # (n, q, m)
    combos[i] = pts[i]  # row i is meaningless; callers drop it
    flat = normalize_rows(f, combos.reshape(-1, ordering.m))
    return ordering.indices_of(flat).reshape(ordering.n, f.q)


def line_table(ordering: PointOrdering) -> np.ndarray:
    """Every line once as a row of q+1 sorted positions, rows in lexicographic order."""
    blocks = []
    for i in range(ordering.n):
        part = _partners(ordering, i)
        # keep each line at its smallest point i, from its smallest partner j
        lo = part.min(axis=1)
        keep = (lo > i) & (lo == np.arange(ordering.n))
        if keep.any():
            rows = np.sort(part[keep], axis=1)
            blocks.append(np.hstack([np.full((rows.shape[0], 1), i, dtype=rows.dtype), rows]))
    table = np.vstack(blocks).astype(np.int64)
    return table[np.lexsort(table.T[::-1])]


def all_lines(ordering: PointOrdering) -> list[Line]:
    """Every line once, ordered by its sorted point positions."""
    return [Line(tuple(row)) for row in line_table(ordering).tolist()]


def planes_through(ordering: PointOrdering, p1, p2) -> list[Plane]:
    """Every plane containing two distinct points."""
    line = line_through(ordering, p1, p2)
    covered = np.zeros(ordering.n, dtype=bool)
    covered[list(line.indices)] = True
    planes = []
    for j in range(ordering.n):
        if covered[j]:
            continue
        plane = plane_through(ordering, p1, p2, ordering.point(j))
        covered[list(plane.indices)] = True
        planes.append(plane)
    return planes


def all_planes(ordering: PointOrdering) -> list[Plane]:
    """Every plane once, ordered by its sorted point positions."""
    if ordering.m < 3:
        return []
    seen: set[Plane] = set()
    for line in all_lines(ordering):
        a, b = line.indices[:2]
        seen.update(planes_through(ordering, ordering.point(a), ordering.point(b)))
    return sorted(seen, key=lambda p: p.indices)
