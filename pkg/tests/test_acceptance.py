"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line; the lines are printed in the
pytest terminal summary under "acceptance criteria". Runtime bounds are
asserted alongside the exact checks.
"""

import itertools
import time
from contextlib import contextmanager

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from perfembed.components import (
    LinearFunctional,
    check_plane_relation,
    component_basis,
    cosets_disjoint,
    joint_span,
    neighborhood,
    relation_vector,
    relations_hold,
)
from perfembed.embed import build_embedding, enumerate_embedded, shorten
from perfembed.hamming import hamming_code
from perfembed.partition import build_partition, classify_batch, enumerate_part, part_contains, shorten_part
from perfembed.projgeom import lines_through_point, planes_through
from perfembed.verify import brute_force_weight3, is_partition, is_perfect_exhaustive, is_perfect_sampled

SPAN_LIMIT = 12  # enumerate whole spans up to this dimension
SUITE_CASES = [(2, 3), (2, 4), (3, 2), (3, 3), (4, 2)]
BINARY_PARTITION = [
    [(0, 0, 0), (1, 1, 1)],
    [(0, 0, 1), (1, 1, 0)],
    [(0, 1, 0), (1, 0, 1)],
    [(1, 0, 0), (0, 1, 1)],
]


@contextmanager
def criterion(tag, title, limit=None):
    """Time the block and record one result line, whatever happens inside."""
    notes = []
    start = time.perf_counter()
    ok = False
    try:
        yield notes
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        within = limit is None or elapsed < limit
        bound = f" (< {limit:g} s)" if limit else ""
        detail = "; ".join(notes)
        line = f"{tag} {'PASS' if ok and within else 'FAIL'}  {title}  [{elapsed:.1f} s{bound}]"
        if detail:
            line += f"  {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    assert within, f"{tag} took {elapsed:.1f} s, bound {limit} s"


def _counting_bound(spec):
    q, n, s = spec.q, spec.n, spec.s
    assert len(spec.labels) == (q - 1) * n + 1
    assert len(spec.labels) >= q**s


def _all_functionals(f, m, vanish_on):
    out = []
    for coeffs in itertools.product(range(f.q), repeat=m):
        if any(coeffs):
            l = LinearFunctional(f, coeffs)
            if all(l(p) == 0 for p in vanish_on):
                out.append(l)
    return out


def _span_sample(basis, seed):
    if basis.dim <= SPAN_LIMIT:
        return basis.elements()
    rng = np.random.Generator(np.random.PCG64(seed))
    return np.vstack([basis.rows, basis.random_elements(rng, 200)])


def test_ac1_embedding_binary():
    with criterion("AC1", "Embedding, q=2 m=4 C={000,111}", limit=5) as notes:
        code = [(0, 0, 0), (1, 1, 1)]
        spec = build_embedding(2, code, 4)
        words = enumerate_embedded(spec)
        assert words.shape == (2048, 15)
        assert np.unique(words, axis=0).shape[0] == 2048
        rep = is_perfect_exhaustive(spec.contains, 2, 15)
        assert rep.passed, rep.summary()
        assert shorten(spec) == set(code)
        notes.append(f"|P(C)|=2048, exhaustive over {rep.words_scanned} words, shorten exact")


def test_ac2_embedding_ternary():
    with criterion("AC2", "Embedding, q=3 m=3 C={(0,0)}", limit=60) as notes:
        spec = build_embedding(3, [(0, 0)], 3)
        words = enumerate_embedded(spec)
        assert words.shape == (59049, 13)
        assert np.unique(words, axis=0).shape[0] == 59049
        rep = is_perfect_exhaustive(spec.contains, 3, 13)
        assert rep.passed and rep.words_scanned == 1594323, rep.summary()
        assert shorten(spec) == {(0, 0)}
        notes.append("|P(C)|=59049, exhaustive over 1594323 words")


def test_ac3_embedding_quaternary_sampled():
    with criterion("AC3", "Embedding, q=4 m=4 repetition code, oracle only", limit=120) as notes:
        code = [(a, a, a) for a in range(4)]
        spec = build_embedding(4, code, 4)
        assert spec.n == 85
        rep = is_perfect_sampled(spec.contains, 4, 85, trials=100_000, seed=0)
        assert rep.passed, rep.summary()
        assert shorten(spec) == set(code)
        notes.append(f"10^5 sampled balls (PCG64 seed 0), shorten exact over 64 queries")


def test_ac4_removed_components_disjoint():
    with criterion("AC4", "Removed components pairwise disjoint", limit=60) as notes:
        for q, m in [(2, 4), (3, 3), (4, 3)]:
            h = hamming_code(q, m)
            f = h.field
            lead = [h.ordering.point(i) for i in range(h.n) if h.ordering.point(i)[0] == 1]
            pairs = 0
            for d, k in itertools.combinations(lead, 2):
                if sum(a != b for a, b in zip(d, k)) < 3:
                    continue
                pairs += 1
                rd = f.vsub(h.bar(d), h.unit(d))
                rk = f.vsub(h.bar(k), h.unit(k))
                assert cosets_disjoint(d, rd, k, rk, h), (q, m, d, k)
            notes.append(f"(q,m)=({q},{m}): {pairs} pairs")


def test_ac5_scaled_point_components_meet():
    with criterion("AC5", "q=4 m=3 switched components intersect", limit=5) as notes:
        h = hamming_code(4, 3)
        f = h.field
        delta, gamma, kappa = (1, 1, 1), (1, 2, 2), (2, 3, 3)
        assert tuple(f.vmul(2, np.array(gamma))) == kappa
        c = f.vsub(f.vsub(h.bar(delta), h.unit(delta)), f.vsub(h.bar(kappa), h.unit(gamma, 2)))
        # pi_1, delta and gamma are collinear, so the plane is the only one through that line
        planes = planes_through(h.ordering, delta, gamma)
        assert len(planes) == 1 and h.ordering.index_of((1, 0, 0)) in planes[0]
        ls = _all_functionals(f, 3, [delta, gamma])
        assert ls
        assert all(check_plane_relation(h, delta, gamma, c, l, planes[0]) for l in ls)
        span = joint_span(component_basis(h, delta), component_basis(h, gamma))
        assert span.contains(c)
        rep2 = f.vsub(h.bar(kappa), h.unit(gamma, 2))
        assert not cosets_disjoint(delta, f.vsub(h.bar(delta), h.unit(delta)), gamma, rep2, h)
        notes.append(f"relation holds for {len(ls)} functionals; difference lies in a span of dim {span.dim}")


def _line_suite(h):
    checks = 0
    for i in range(h.n):
        delta = h.ordering.point(i)
        elements = _span_sample(component_basis(h, delta), seed=i)
        ls = _all_functionals(h.field, h.m, [delta])
        vecs = np.array([relation_vector(h, l, line.indices)
                         for line in lines_through_point(h.ordering, delta) for l in ls])
        assert relations_hold(h, elements, vecs).all(), delta
        checks += elements.shape[0] * vecs.shape[0]
    return checks


def _plane_suite(h):
    checks = 0
    if h.m < 3:
        return 0
    for i, j in itertools.combinations(range(h.n), 2):
        delta, kappa = h.ordering.point(i), h.ordering.point(j)
        span = joint_span(component_basis(h, delta), component_basis(h, kappa))
        elements = _span_sample(span, seed=i * h.n + j)
        ls = _all_functionals(h.field, h.m, [delta, kappa])
        vecs = np.array([relation_vector(h, l, plane.indices)
                         for plane in planes_through(h.ordering, delta, kappa) for l in ls])
        assert relations_hold(h, elements, vecs).all(), (delta, kappa)
        checks += elements.shape[0] * vecs.shape[0]
    return checks


def _switch_suite(h):
    if h.q**h.n > 10**5:
        return None
    f = h.field
    rng = np.random.Generator(np.random.PCG64(h.q * 100 + h.m))
    shifts = [np.zeros(h.n, dtype=np.int64)] + list(rng.integers(0, h.q, size=(3, h.n)))
    checks = 0
    for i in range(h.n):
        delta = h.ordering.point(i)
        elements = component_basis(h, delta).elements()
        for z in shifts:
            base = f.vadd(elements, z[None, :])
            reference = neighborhood(base, h.q, h.n)
            for mu in range(1, h.q):
                moved = f.vadd(base, h.unit(delta, mu)[None, :])
                assert neighborhood(moved, h.q, h.n) == reference, (delta, mu)
                checks += 1
    return checks


def test_ac6_component_property_suites():
    with criterion("AC6", "Component switching and relation suites", limit=60) as notes:
        for q, m in SUITE_CASES:
            h = hamming_code(q, m)
            l2, l3, l1 = _line_suite(h), _plane_suite(h), _switch_suite(h)
            l1_text = "skipped, q^n > 10^5" if l1 is None else f"{l1} shifts"
            notes.append(f"({q},{m}): line {l2}, plane {l3}, neighbourhood {l1_text}")


def test_ac7_partition_binary():
    with criterion("AC7", "Partition embedding, q=2 s=3 four parts", limit=30) as notes:
        spec = build_partition(2, BINARY_PARTITION, 3)
        assert len(spec.labels) == 16
        _counting_bound(spec)
        rep = is_partition(lambda w: classify_batch(spec, w), lambda l, w: part_contains(spec, l, w),
                           spec.labels, 2, 15)
        assert rep.passed and rep.words_scanned == 2**15, rep.summary()
        sizes = []
        for label in spec.labels:
            r = is_perfect_exhaustive(lambda w: part_contains(spec, label, w), 2, 15)
            assert r.passed, (label, r.summary())
            sizes.append(enumerate_part(spec, label).shape[0])
        assert sizes == [2048] * 16 and sum(sizes) == 2**15
        for j, code in enumerate(BINARY_PARTITION, start=1):
            assert shorten_part(spec, j) == set(code)
        notes.append("16 perfect parts of 2048 words, shortening exact for j=1..4")


def test_ac8_partition_ternary_singletons():
    with criterion("AC8", "Partition embedding, q=3 s=2 nine singletons", limit=600) as notes:
        xs = list(itertools.product(range(3), repeat=2))
        spec = build_partition(3, [[x] for x in xs], 2)
        assert spec.n == 13 and len(spec.labels) == 27
        _counting_bound(spec)
        rep = is_partition(lambda w: classify_batch(spec, w), lambda l, w: part_contains(spec, l, w),
                           spec.labels, 3, 13)
        assert rep.passed, rep.summary()
        for label in spec.labels:
            r = is_perfect_exhaustive(lambda w: part_contains(spec, label, w), 3, 13)
            assert r.passed, (label, r.summary())
        for j, x in enumerate(xs, start=1):
            assert shorten_part(spec, j) == {x}
        notes.append("27 perfect parts over 3^13 words, nine singletons recovered")


def test_ac9_triples_oracle():
    with criterion("AC9", "Line-based weight-3 words equal brute force", limit=30) as notes:
        for q, m in SUITE_CASES:
            h = hamming_code(q, m)
            line_based = {tuple(r) for r in h.triples().tolist()}
            brute = {tuple(r) for r in brute_force_weight3(h).tolist()}
            assert line_based == brute, (q, m)
            notes.append(f"({q},{m}): {len(brute)}")


def test_ac10_counting_bound():
    with criterion("AC10", "Part count equals (q-1)n+1 and is at least q^s") as notes:
        built = 0
        cases = [(2, BINARY_PARTITION, 3)]
        for q, s in [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2), (5, 2), (3, 3)]:
            cases.append((q, [[x] for x in itertools.product(range(q), repeat=s)], s))
        cases.append((2, [list(itertools.product(range(2), repeat=2))[i:i + 1] for i in range(4)], 2))
        for q, codes, s in cases:
            spec = build_partition(q, codes, s)
            _counting_bound(spec)
            assert spec.n >= (q**s - 1) // (q - 1)
            built += 1
        notes.append(f"{built} partitions")
