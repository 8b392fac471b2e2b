"""Compare the numba kernels with their pure-numpy counterparts.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Workloads mirror the hot paths: syndromes of a batch of length-85 words
over GF(4), span membership against a 63-dimensional component, ball
counting over all of F_2^20, and expanding a 12-dimensional span.
"""

import argparse
import time

import numpy as np

from perfembed import kernels
from perfembed.components import component_basis
from perfembed.hamming import hamming_code


def best_of(fn, repeat):
    fn()  # warm-up; also triggers compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def workloads(rng):
    h = hamming_code(4, 4)
    add_t, mul_t, neg_t = h.field.kernel_tables()
    words = rng.integers(0, 4, size=(50_000, h.n))
    yield "syndromes GF(4), 50k x 85", lambda k: k["matmul"](words, h.points, 4, add_t, mul_t)

    basis = component_basis(h, (1, 1, 1, 1))
    piv = np.array(basis.pivots, dtype=np.int64)
    shift = np.zeros(h.n, dtype=np.int64)
    yield (f"span membership GF(4), dim {basis.dim}, 20k words",
           lambda k: k["in_span"](words[:20_000], shift, basis.rows, piv, 4, add_t, mul_t, neg_t))

    total = 2**20
    members = np.unique(rng.integers(0, total, size=total // 21))
    yield "ball counts F_2^20", lambda k: k["ball_counts"](members, 2, 20, total)

    h3 = hamming_code(3, 3)
    a3, m3, _ = h3.field.kernel_tables()
    rows = h3.generator[:10]
    yield "span elements GF(3), dim 10", lambda k: k["span_elements"](rows, 3, a3, m3)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    rng = np.random.Generator(np.random.PCG64(0))
    flavours = {
        "numba": {name: getattr(kernels, "nb_" + name) for name in ("matmul", "in_span", "ball_counts", "span_elements")},
        "numpy": {name: getattr(kernels, "np_" + name) for name in ("matmul", "in_span", "ball_counts", "span_elements")},
    }
    print(f"{'workload':48s} {'numba':>10s} {'numpy':>10s} {'speedup':>8s}")
    for title, run in workloads(rng):
        t_nb, out_nb = best_of(lambda: run(flavours["numba"]), args.repeat)
        t_np, out_np = best_of(lambda: run(flavours["numpy"]), args.repeat)
        assert np.array_equal(out_nb, out_np), title
        print(f"{title:48s} {t_nb * 1e3:8.1f}ms {t_np * 1e3:8.1f}ms {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
