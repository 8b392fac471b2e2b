"""Hot inner loops, in a numba flavour and a pure-numpy flavour.

Every kernel takes field arithmetic as ``(q, add_t, mul_t, neg_t)`` from
:meth:`FieldSpec.kernel_tables`; empty tables mean residue arithmetic mod q.
Words are int64 arrays with one word per row.

The public names at the bottom are bound to one flavour at import time
(see :mod:`perfembed._accel`); both flavours stay importable so they can be
cross-checked and benchmarked against each other.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

# ---------------------------------------------------------------------------
# numba flavour


@njit(cache=True, inline="always")
def _fadd(a, b, q, add_t):
    if add_t.shape[0] == 0:
        s = a + b
        return s - q if s >= q else s
    return add_t[a, b]


@njit(cache=True, inline="always")
def _fmul(a, b, q, mul_t):
    if mul_t.shape[0] == 0:
        return (a * b) % q
    return mul_t[a, b]


@njit(cache=True, inline="always")
def _fneg(a, q, neg_t):
    if neg_t.shape[0] == 0:
        return (q - a) % q
    return neg_t[a]


@njit(cache=True)
def nb_matmul(words, mat, q, add_t, mul_t):
    """``words @ mat`` over GF(q); words is (N, n), mat is (n, r)."""
    nw, n = words.shape
    r = mat.shape[1]
    out = np.zeros((nw, r), dtype=np.int64)
    prime = add_t.shape[0] == 0
    # characteristic 2: addition is xor of the encodings
    xor = (not prime) and add_t[1, 1] == 0
    # reduce prime-field partial sums before they can overflow int64
    flush = max(1, (1 << 62) // max(1, (q - 1) * (q - 1)))
    acc = np.zeros(r, dtype=np.int64)
    for t in range(nw):
        acc[:] = 0
        pending = 0
        for i in range(n):
            w = words[t, i]
            if w == 0:
                continue
            if prime:
                for j in range(r):
                    acc[j] += w * mat[i, j]
                pending += 1
                if pending == flush:
                    for j in range(r):
                        acc[j] %= q
                    pending = 0
            else:
                mrow = mul_t[w]
                if xor:
                    for j in range(r):
                        acc[j] ^= mrow[mat[i, j]]
                else:
                    for j in range(r):
                        acc[j] = add_t[acc[j], mrow[mat[i, j]]]
        for j in range(r):
            out[t, j] = acc[j] % q if prime else acc[j]
    return out


@njit(cache=True)
def nb_in_span(words, neg_shift, rows, pivots, q, add_t, mul_t, neg_t):
    """Row-space membership of ``words - shift`` against a reduced echelon basis.

    ``neg_shift`` is the negated shift so the kernel only adds.
    """
    nw, n = words.shape
    r = rows.shape[0]
    out = np.zeros(nw, dtype=np.bool_)
    buf = np.empty(n, dtype=np.int64)
    for t in range(nw):
        for i in range(n):
            buf[i] = _fadd(words[t, i], neg_shift[i], q, add_t)
        for k in range(r):
            c = buf[pivots[k]]
            if c != 0:
                nc = _fneg(c, q, neg_t)
                for i in range(n):
                    rv = rows[k, i]
                    if rv != 0:
                        buf[i] = _fadd(buf[i], _fmul(nc, rv, q, mul_t), q, add_t)
        ok = True
        for i in range(n):
            if buf[i] != 0:
                ok = False
                break
        out[t] = ok
    return out


@njit(cache=True)
def nb_ball_counts(member_idx, q, n, total):
    """For every word index, how many listed members lie within distance 1."""
    counts = np.zeros(total, dtype=np.int32)
    weights = np.empty(n, dtype=np.int64)
    w = 1
    for i in range(n - 1, -1, -1):
        weights[i] = w
        w *= q
    for t in range(member_idx.shape[0]):
        x = member_idx[t]
        counts[x] += 1
        for i in range(n):
            d = (x // weights[i]) % q
            base = x - d * weights[i]
            for v in range(q):
                if v != d:
                    counts[base + v * weights[i]] += 1
    return counts


@njit(cache=True)
def nb_span_elements(rows, q, add_t, mul_t):
    """All q**r linear combinations of the r rows, coefficient vectors in lex order."""
    r, n = rows.shape
    total = 1
    for _ in range(r):
        total *= q
    out = np.zeros((total, n), dtype=np.int64)
    coef = np.zeros(r, dtype=np.int64)
    for t in range(total):
        rem = t
        for k in range(r - 1, -1, -1):
            coef[k] = rem % q
            rem //= q
        for k in range(r):
            c = coef[k]
            if c != 0:
                for i in range(n):
                    rv = rows[k, i]
                    if rv != 0:
                        out[t, i] = _fadd(out[t, i], _fmul(c, rv, q, mul_t), q, add_t)
    return out


# ---------------------------------------------------------------------------
# numpy flavour


def _char(q):
    p = 2
    while q % p:
        p += 1
    k = 0
    while q > 1:
        q //= p
        k += 1
    return p, k


def np_matmul(words, mat, q, add_t, mul_t):
    words = np.asarray(words, dtype=np.int64)
    mat = np.asarray(mat, dtype=np.int64)
    p, k = _char(q)
    if k == 1:  # prime field: tables, when present, are residues anyway
        return (words @ mat) % q
    # addition in GF(p^k) is digit-wise mod p on the base-p encoding, so a
    # one-hot matmul against the digits of every product a * mat[i, j] sums
    # them all at once (exact in float32: sums stay below n * p)
    n, m = mat.shape
    prod = mul_t[np.arange(q)[None, :, None], mat[:, None, :]]  # (n, q, m)
    place = p ** np.arange(k, dtype=np.int64)
    digits = ((prod[..., None] // place) % p).reshape(n * q, m * k).astype(np.float32)
    shift = q * np.arange(n, dtype=np.int64)
    out = np.empty((words.shape[0], m), dtype=np.int64)
    step = max(1, (1 << 24) // (n * q))
    for lo in range(0, words.shape[0], step):
        block = words[lo : lo + step]
        onehot = np.zeros((block.shape[0], n * q), dtype=np.float32)
        flat = (block + shift) + (n * q) * np.arange(block.shape[0], dtype=np.int64)[:, None]
        onehot.reshape(-1)[flat.ravel()] = 1.0
        sums = (onehot @ digits).astype(np.int64).reshape(-1, m, k)
        out[lo : lo + step] = (sums % p) @ place
    return out


def np_in_span(words, neg_shift, rows, pivots, q, add_t, mul_t, neg_t):
    words = np.asarray(words, dtype=np.int64)
    if add_t.shape[0] == 0:
        buf = (words + neg_shift[None, :]) % q
    else:
        buf = add_t[words, neg_shift[None, :]]
    if rows.shape[0] == 0:
        return ~buf.any(axis=1)
    # rows are reduced echelon, so the only candidate combination uses the
    # pivot entries of buf as coefficients
    return (np_matmul(buf[:, pivots], rows, q, add_t, mul_t) == buf).all(axis=1)


def np_ball_counts(member_idx, q, n, total):
    member_idx = np.asarray(member_idx, dtype=np.int64)
    counts = np.bincount(member_idx, minlength=total).astype(np.int32)
    for i in range(n):
        w = q ** (n - 1 - i)
        d = (member_idx // w) % q
        base = member_idx - d * w
        for v in range(q):
            nb = base[d != v] + v * w
            counts += np.bincount(nb, minlength=total).astype(np.int32)
    return counts


def np_span_elements(rows, q, add_t, mul_t):
    r = rows.shape[0]
    idx = np.arange(q**r, dtype=np.int64)
    coef = np.empty((idx.shape[0], r), dtype=np.int64)
    for k in range(r - 1, -1, -1):
        coef[:, k] = idx % q
        idx //= q
    return np_matmul(coef, rows, q, add_t, mul_t)


# ---------------------------------------------------------------------------

if USE_NUMBA:
    matmul = nb_matmul
    in_span = nb_in_span
    ball_counts = nb_ball_counts
    span_elements = nb_span_elements
    BACKEND = "numba"
else:
    matmul = np_matmul
    in_span = np_in_span
    ball_counts = np_ball_counts
    span_elements = np_span_elements
    BACKEND = "numpy"
