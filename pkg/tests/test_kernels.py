import os
import subprocess
import sys

import numpy as np
import pytest

from perfembed import kernels
from perfembed.gf import create_field
from perfembed.linalg import rref

ORDERS = [2, 3, 4, 5, 8, 9, 16, 27, 251, 65521]


@pytest.mark.parametrize("q", ORDERS)
def test_matmul_flavours_agree(q, rng):
    f = create_field(q)
    add_t, mul_t, _ = f.kernel_tables()
    words = rng.integers(0, q, size=(300, 40))
    mat = rng.integers(0, q, size=(40, 6))
    got = kernels.nb_matmul(words, mat, q, add_t, mul_t)
    assert np.array_equal(got, kernels.np_matmul(words, mat, q, add_t, mul_t))
    # scalar reference
    ref = np.zeros((words.shape[0], 6), dtype=np.int64)
    for i in range(40):
        ref = f.vadd(ref, f.vmul(words[:, i, None], mat[i][None, :]))
    assert np.array_equal(got, ref)


@pytest.mark.parametrize("q", ORDERS)
def test_in_span_flavours_agree(q, rng):
    f = create_field(q)
    add_t, mul_t, neg_t = f.kernel_tables()
    gens = rng.integers(0, q, size=(4, 12))
    rows, piv = rref(f, gens)
    piv = np.array(piv, dtype=np.int64)
    inside = kernels.nb_matmul(rng.integers(0, q, size=(50, rows.shape[0])), rows, q, add_t, mul_t)
    shift = rng.integers(0, q, size=12)
    words = np.vstack([f.vadd(inside, shift[None, :]), rng.integers(0, q, size=(50, 12))])
    neg = f.vneg(shift)
    a = kernels.nb_in_span(words, neg, rows, piv, q, add_t, mul_t, neg_t)
    b = kernels.np_in_span(words, neg, rows, piv, q, add_t, mul_t, neg_t)
    assert np.array_equal(a, b)
    assert a[:50].all()
    # random words are almost never in a 4-dim subspace of a 12-dim space
    assert a[50:].sum() < 5


@pytest.mark.parametrize("q,n", [(2, 7), (3, 4), (4, 3), (5, 2)])
def test_ball_counts_flavours_agree(q, n, rng):
    total = q**n
    members = np.unique(rng.integers(0, total, size=total // 3))
    a = kernels.nb_ball_counts(members, q, n, total)
    b = kernels.np_ball_counts(members, q, n, total)
    assert np.array_equal(a, b)
    # direct count for a few words
    digits = lambda x: [(x // q ** (n - 1 - i)) % q for i in range(n)]
    mset = {tuple(digits(x)) for x in members}
    for w in rng.integers(0, total, size=20):
        dw = digits(int(w))
        near = sum(sum(u != v for u, v in zip(dw, m)) <= 1 for m in mset)
        assert a[w] == near


@pytest.mark.parametrize("q", [2, 3, 4, 9, 13])
def test_span_elements_flavours_agree(q, rng):
    f = create_field(q)
    add_t, mul_t, _ = f.kernel_tables()
    rows = rng.integers(0, q, size=(3, 8))
    a = kernels.nb_span_elements(rows, q, add_t, mul_t)
    b = kernels.np_span_elements(rows, q, add_t, mul_t)
    assert a.shape == (q**3, 8)
    assert np.array_equal(a, b)


def test_backend_name():
    assert kernels.BACKEND in ("numba", "numpy")


_SCRIPT = """
import perfembed
from perfembed.embed import build_embedding, shorten
from perfembed.verify import is_perfect_exhaustive, is_perfect_sampled
spec = build_embedding(2, [(0, 0, 0), (1, 1, 1)], 4)
a = is_perfect_exhaustive(spec.contains, 2, 15).passed
spec3 = build_embedding(3, [(0, 0, 0), (1, 1, 1)], 4)
b = is_perfect_sampled(spec3.contains, 3, 40, trials=300, seed=2).passed
print(perfembed.BACKEND, a, b, sorted(shorten(spec3)))
"""


def test_numpy_fallback_gives_same_answers():
    outs = {}
    for flag in ("1", ""):
        env = dict(os.environ, PERFEMBED_DISABLE_NUMBA=flag)
        res = subprocess.run([sys.executable, "-c", _SCRIPT], env=env, capture_output=True, text=True, check=True)
        outs[flag] = res.stdout.split(maxsplit=1)
    assert outs["1"][0] == "numpy" and outs[""][0] == "numba"
    assert outs["1"][1] == outs[""][1]
    assert outs["1"][1].startswith("True True")
