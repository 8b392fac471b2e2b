import itertools
import math

import numpy as np
import pytest

from perfembed.exceptions import CapExceededError
from perfembed.gf import create_field
from perfembed.hamming import HammingCode, hamming_code
from perfembed.linalg import rank
from perfembed.verify import is_perfect_exhaustive
from perfembed.words import iter_space


def test_syndrome_examples():
    h = hamming_code(3, 2)
    assert not h.syndrome(np.zeros(h.n, dtype=int)).any()
    assert tuple(h.syndrome(h.unit((1, 1)))) == (1, 1)
    assert tuple(h.syndrome([2, 2, 1, 0])) == (0, 0)


def test_syndrome_errors():
    h = hamming_code(3, 2)
    with pytest.raises(ValueError):
        h.syndrome([0, 0, 0])
    with pytest.raises(ValueError):
        h.syndrome([0, 0, 3, 0])


def test_contains_examples():
    h = hamming_code(2, 3)
    assert h.contains(np.zeros(7, dtype=int))
    for i in range(h.n):
        assert not h.contains(h.unit(h.ordering.point(i)))
    w = h.unit((1, 1, 1)) + h.unit((1, 0, 0)) + h.unit((0, 1, 1))
    assert h.contains(w)


def test_batch_syndrome_matches_single(rng):
    h = hamming_code(9, 3)
    ws = rng.integers(0, 9, size=(40, h.n))
    batch = h.syndrome(ws)
    assert all(np.array_equal(batch[i], h.syndrome(ws[i])) for i in range(40))


def _plain_syndrome(h, w):
    f = h.field
    acc = np.zeros(h.m, dtype=np.int64)
    for i in range(h.n):
        acc = f.vadd(acc, f.vmul(int(w[i]), h.points[i]))
    return acc


@pytest.mark.parametrize("q,m", [(4, 3), (9, 2), (5, 3), (16, 2), (27, 2), (65521, 2)])
def test_syndrome_matches_definition(q, m, rng):
    h = hamming_code(q, m)
    ws = rng.integers(0, q, size=(10, h.n))
    for w in ws:
        assert np.array_equal(h.syndrome(w), _plain_syndrome(h, w))


def test_decode_examples(rng):
    h = hamming_code(3, 3)
    cw = h.enumerate_codewords()
    c = cw[rng.integers(len(cw))]
    res = h.decode(c)
    assert np.array_equal(res.codeword, c) and res.error_position is None and res.error_value is None
    for delta in [(1, 0, 0), (0, 1, 2), (1, 2, 1)]:
        w = h.field.vadd(c, h.unit(delta, 2))
        res = h.decode(w)
        assert np.array_equal(res.codeword, c)
        assert res.error_position == delta and res.error_value == 2


@pytest.mark.parametrize("q,m", [(2, 3), (2, 4), (3, 2), (4, 2), (5, 2)])
def test_decode_exhaustive(q, m):
    h = hamming_code(q, m)
    for _, block in iter_space(q, h.n):
        for w in block:
            c = h.decode(w).codeword
            assert h.contains(c)
            assert np.count_nonzero(c != w) <= 1


@pytest.mark.parametrize("q,m", [(3, 3), (4, 3), (2, 6), (7, 2), (8, 3)])
def test_decode_sampled(q, m, rng):
    h = hamming_code(q, m)
    for w in rng.integers(0, q, size=(300, h.n)):
        c = h.decode(w).codeword
        assert h.contains(c) and np.count_nonzero(c != w) <= 1


@pytest.mark.parametrize("q,m", [(2, 3), (3, 2)])
def test_perfect_by_direct_count(q, m):
    h = hamming_code(q, m)
    cw = [tuple(c) for c in h.enumerate_codewords().tolist()]
    for w in itertools.product(range(q), repeat=h.n):
        near = sum(sum(a != b for a, b in zip(w, c)) <= 1 for c in cw)
        assert near == 1


@pytest.mark.parametrize("q,m", [(2, 3), (2, 4), (3, 2), (3, 3)])
def test_perfect_exhaustive(q, m):
    h = hamming_code(q, m)
    rep = is_perfect_exhaustive(h.contains, q, h.n)
    assert rep.passed, rep.summary()


@pytest.mark.parametrize("q,m,size", [(2, 3, 16), (3, 2, 9), (2, 4, 2048), (4, 2, 64), (3, 3, 3**10)])
def test_enumerate_codewords(q, m, size):
    h = hamming_code(q, m)
    cw = h.enumerate_codewords()
    assert cw.shape == (size, h.n)
    assert np.unique(cw, axis=0).shape[0] == size
    assert h.contains(cw).all()
    assert h.dimension == h.n - m


def test_enumerate_cap():
    h = hamming_code(2, 5)
    with pytest.raises(CapExceededError):
        h.enumerate_codewords(cap=1000)


def _brute_weight3(h):
    out = set()
    for w in itertools.product(range(h.q), repeat=h.n):
        if sum(x != 0 for x in w) == 3 and not _plain_syndrome(h, w).any():
            out.add(w)
    return out


def test_triples_small_examples():
    h = hamming_code(2, 3)
    brute = _brute_weight3(h)
    assert len(brute) == 7
    assert set(map(tuple, h.triples().tolist())) == brute
    for i in range(h.n):
        delta = h.ordering.point(i)
        t = h.triples_through(delta)
        assert t.shape[0] == 3
        assert {tuple(r) for r in t.tolist()} == {w for w in brute if w[i] == 1}

    h = hamming_code(3, 2)
    brute = _brute_weight3(h)
    assert len(brute) == 8
    assert set(map(tuple, h.triples().tolist())) == brute
    for i in range(h.n):
        t = h.triples_through(h.ordering.point(i))
        assert t.shape[0] == 3
        assert {tuple(r) for r in t.tolist()} == {w for w in brute if w[i] == 1}
    t = {tuple(r) for r in h.triples_through((1, 1)).tolist()}
    assert (2, 2, 1, 0) in t


@pytest.mark.parametrize("q,m", [(2, 4), (3, 3), (4, 3), (5, 2), (8, 2)])
def test_triple_invariants(q, m):
    h = hamming_code(q, m)
    t = h.triples()
    assert (np.count_nonzero(t, axis=1) == 3).all()
    assert h.contains(t).all()
    assert np.unique(t, axis=0).shape[0] == t.shape[0]
    lines = (q**m - 1) * (q**m - q) // ((q * q - 1) * (q * q - q))
    assert t.shape[0] == lines * math.comb(q + 1, 3) * (q - 1)
    f = create_field(q)
    for row in t[:: max(1, t.shape[0] // 50)]:
        sup = np.nonzero(row)[0]
        assert rank(f, h.points[sup]) == 2


def test_invalid_point():
    h = hamming_code(3, 2)
    with pytest.raises(ValueError):
        h.triples_through((2, 1))


def test_shared_instance():
    assert hamming_code(4, 3) is hamming_code(create_field(4), 3)
    assert isinstance(hamming_code(2, 3), HammingCode)
