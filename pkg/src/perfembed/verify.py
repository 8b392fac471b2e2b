"""Independent checks: 1-codes, 1-perfect codes, partitions, weight-3 words.

Verifiers take membership oracles rather than materialized sets. An oracle
maps a 2-D batch of words (one per row) to a boolean array. Sampled checks
draw words from ``numpy.random.Generator(PCG64(seed))`` in row-major order,
so a seed fully determines the sample.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, product

import numpy as np

from . import kernels
from .exceptions import CapExceededError
from .hamming import DEFAULT_CAP, HammingCode
from .words import iter_space, words_from_indices

DEFAULT_TRIALS = 100_000

Oracle = Callable[[np.ndarray], np.ndarray]


@dataclass
class VerificationReport:
    passed: bool
    mode: str  # "exhaustive" or "sampled"
    witness: object = None
    seed: int | None = None
    trials: int | None = None
    words_scanned: int = 0
    balls_checked: int = 0
    message: str = ""

    def __bool__(self) -> bool:
        return self.passed

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def summary(self) -> str:
        parts = [self.verdict.upper(), self.mode]
        if self.seed is not None:
            parts.append(f"seed={self.seed} trials={self.trials}")
        parts.append(f"scanned={self.words_scanned}")
        if self.message:
            parts.append(self.message)
        return " ".join(parts)


def is_one_code(words: Iterable[Sequence[int]]) -> VerificationReport:
    """Pass iff all pairwise Hamming distances are at least 3."""
    ws = sorted({tuple(int(x) for x in w) for w in words})
    if len({len(w) for w in ws}) > 1:
        raise ValueError("words of different lengths")
    if len(ws) < 2:
        return VerificationReport(True, "exhaustive", words_scanned=len(ws))
    arr = np.array(ws, dtype=np.int64)
    for i in range(arr.shape[0] - 1):
        dist = (arr[i + 1 :] != arr[i]).sum(axis=1)
        close = np.nonzero(dist <= 2)[0]
        if close.size:
            j = i + 1 + int(close[0])
            return VerificationReport(
                False,
                "exhaustive",
                witness=(ws[i], ws[j]),
                words_scanned=len(ws),
                message=f"distance {int(dist[close[0]])}",
            )
    return VerificationReport(True, "exhaustive", words_scanned=len(ws))


def ball(q: int, n: int, w) -> np.ndarray:
    """The n(q-1)+1 words within distance 1 of w, w first."""
    return balls(q, n, np.asarray(w, dtype=np.int64)[None, :])[0]


def balls(q: int, n: int, centers: np.ndarray) -> np.ndarray:
    """Radius-1 balls around each center, shape (len(centers), n(q-1)+1, n)."""
    c = centers.shape[0]
    size = n * (q - 1) + 1
    out = np.repeat(centers[:, None, :], size, axis=1)
    slot = 1
    for i in range(n):
        for d in range(1, q):
            out[:, slot, i] = (centers[:, i] + d) % q
            slot += 1
    return out.reshape(c, size, n)


def ball_member_count(member: Oracle, q: int, n: int, w) -> int:
    """Number of oracle members within distance 1 of w; re-checks a witness."""
    return int(np.count_nonzero(member(ball(q, n, w))))


def is_perfect_exhaustive(member: Oracle, q: int, n: int, cap: int = DEFAULT_CAP) -> VerificationReport:
    """Every word of F^n has exactly one member within distance 1."""
    total = q**n
    if total > cap:
        raise CapExceededError(f"{q}^{n} words exceeds cap {cap}")
    found = []
    for start, block in iter_space(q, n):
        hit = np.asarray(member(block), dtype=bool)
        found.append(start + np.nonzero(hit)[0])
    member_idx = np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
    counts = kernels.ball_counts(member_idx.astype(np.int64), q, n, total)
    bad = np.nonzero(counts != 1)[0]
    if bad.size:
        w = tuple(int(x) for x in words_from_indices(bad[0], q, n))
        return VerificationReport(
            False,
            "exhaustive",
            witness=w,
            words_scanned=total,
            balls_checked=total,
            message=f"{int(counts[bad[0]])} members within distance 1 of witness",
        )
    return VerificationReport(True, "exhaustive", words_scanned=total, balls_checked=total,
                              message=f"{member_idx.size} members")


def _sample_chunks(q: int, n: int, trials: int, seed: int, chunk: int):
    rng = np.random.Generator(np.random.PCG64(seed))
    done = 0
    while done < trials:
        c = min(chunk, trials - done)
        yield done, rng.integers(0, q, size=(c, n), dtype=np.int64)
        done += c


def sample_words(q: int, n: int, trials: int, seed: int) -> np.ndarray:
    """The words a sampled check with this seed visits, in order."""
    return np.vstack([w for _, w in _sample_chunks(q, n, trials, seed, 4096)])


def is_perfect_sampled(member: Oracle, q: int, n: int, trials: int = DEFAULT_TRIALS, seed: int = 0) -> VerificationReport:
    """Check the exactly-one-member-per-ball property on seeded random words."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    size = n * (q - 1) + 1
    chunk = max(1, (1 << 22) // (size * n))
    checked = 0
    for offset, centers in _sample_chunks(q, n, trials, seed, 4096):
        for lo in range(0, centers.shape[0], chunk):
            sub = centers[lo : lo + chunk]
            hits = np.asarray(member(balls(q, n, sub).reshape(-1, n)), dtype=bool)
            per = hits.reshape(sub.shape[0], size).sum(axis=1)
            checked += sub.shape[0]
            bad = np.nonzero(per != 1)[0]
            if bad.size:
                return VerificationReport(
                    False,
                    "sampled",
                    witness=tuple(int(x) for x in sub[bad[0]]),
                    seed=seed,
                    trials=trials,
                    words_scanned=checked * size,
                    balls_checked=checked,
                    message=f"{int(per[bad[0]])} members within distance 1 of witness "
                    f"(sample #{offset + lo + int(bad[0])})",
                )
    return VerificationReport(True, "sampled", seed=seed, trials=trials,
                              words_scanned=checked * size, balls_checked=checked)


def is_partition(
    classify: Callable[[np.ndarray], np.ndarray],
    part_contains: Callable[[object, np.ndarray], np.ndarray],
    labels: Sequence,
    q: int,
    n: int,
    cap: int = DEFAULT_CAP,
    trials: int | None = None,
    seed: int = 0,
) -> VerificationReport:
    """Every word is claimed by exactly one label, and that is the label ``classify`` returns.

    ``classify`` maps a batch to positions in ``labels``. Exhaustive over F^n
    unless ``trials`` is given.
    """
    if trials is None:
        if q**n > cap:
            raise CapExceededError(f"{q}^{n} words exceeds cap {cap}; pass trials for sampling")
        blocks = iter_space(q, n)
        mode = "exhaustive"
    else:
        if trials < 1:
            raise ValueError("trials must be >= 1")
        blocks = _sample_chunks(q, n, trials, seed, 1 << 16)
        mode = "sampled"
    scanned = 0
    for start, block in blocks:
        cls = np.asarray(classify(block))
        claims = np.zeros(block.shape[0], dtype=np.int64)
        own = np.zeros(block.shape[0], dtype=bool)
        for pos, label in enumerate(labels):
            hit = np.asarray(part_contains(label, block), dtype=bool)
            claims += hit
            own |= hit & (cls == pos)
        scanned += block.shape[0]
        bad = np.nonzero((claims != 1) | ~own)[0]
        if bad.size:
            b = int(bad[0])
            if claims[b] == 0:
                msg = "word claimed by no part"
            elif claims[b] > 1:
                msg = f"word claimed by {int(claims[b])} parts"
            else:
                msg = "classifier disagrees with part membership"
            return VerificationReport(
                False, mode, witness=tuple(int(x) for x in block[b]),
                seed=seed if trials else None, trials=trials,
                words_scanned=scanned, message=msg,
            )
    return VerificationReport(True, mode, seed=seed if trials else None, trials=trials,
                              words_scanned=scanned, message=f"{len(labels)} parts")


def _plain_syndromes(h: HammingCode, ws: np.ndarray) -> np.ndarray:
    # deliberately avoids the compiled kernels
    f = h.field
    acc = np.zeros((ws.shape[0], h.m), dtype=np.int64)
    for i in range(h.n):
        acc = f.vadd(acc, f.vmul(ws[:, i, None], h.points[i][None, :]))
    return acc


def brute_force_weight3(h: HammingCode, cap: int = DEFAULT_CAP) -> np.ndarray:
    """All weight-3 words with zero syndrome, by direct search, sorted lexicographically."""
    q, n = h.q, h.n
    found = []
    if q**n <= cap:
        for _, block in iter_space(q, n):
            block = block[np.count_nonzero(block, axis=1) == 3]
            if block.size:
                found.append(block[~_plain_syndromes(h, block).any(axis=1)])
    else:
        n_sup = n * (n - 1) * (n - 2) // 6
        vals = np.array(list(product(range(1, q), repeat=3)), dtype=np.int64)
        if n_sup * vals.shape[0] > cap:
            raise CapExceededError("support enumeration exceeds cap")
        for sup in combinations(range(n), 3):
            block = np.zeros((vals.shape[0], n), dtype=np.int64)
            block[:, list(sup)] = vals
            found.append(block[~_plain_syndromes(h, block).any(axis=1)])
    if not found:
        return np.zeros((0, n), dtype=np.int64)
    out = np.vstack(found)
    order = np.lexsort(out.T[::-1])
    return out[order]


def explicit_oracle(words, q: int, n: int) -> Oracle:
    """Membership oracle for an explicitly listed set of words."""
    arr = np.asarray(list(words), dtype=np.int64).reshape(-1, n)
    if n * np.log2(q) < 62:
        keys = np.unique(arr @ (q ** np.arange(n - 1, -1, -1, dtype=np.int64)))

        def member(ws):
            idx = np.asarray(ws, dtype=np.int64) @ (q ** np.arange(n - 1, -1, -1, dtype=np.int64))
            pos = np.searchsorted(keys, idx)
            pos[pos == keys.size] = 0
            return keys[pos] == idx if keys.size else np.zeros(idx.shape, dtype=bool)

        return member
    table = set(map(tuple, arr.tolist()))
    return lambda ws: np.array([tuple(w) in table for w in np.asarray(ws).tolist()], dtype=bool)
