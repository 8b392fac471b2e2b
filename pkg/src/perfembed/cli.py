"""Command-line interface.

Exit codes: 0 success or verification pass, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import _accel
from .codecs import (
    format_word,
    load_construction,
    read_code,
    read_partition,
    save_code,
    save_construction,
    write_partition,
)
from .components import component_basis
from .embed import EmbeddingSpec, build_embedding, embedded_contains, enumerate_embedded, shorten
from .exceptions import CapExceededError, NotAOneCodeError, NotAPartitionError, ParseError, UnsupportedOrderError
from .gf import create_field
from .hamming import DEFAULT_CAP, hamming_code
from .partition import (
    PartitionSpec,
    build_partition,
    classify,
    classify_batch,
    enumerate_part,
    part_contains,
    shorten_part,
)
from .projgeom import all_lines, all_planes, enumerate_points
from .verify import (
    DEFAULT_TRIALS,
    explicit_oracle,
    is_one_code,
    is_partition,
    is_perfect_exhaustive,
    is_perfect_sampled,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split("."))
    except ValueError:
        raise UsageError(f"--delta: expected dot-separated integers, got {text!r}") from None


def _word(text: str, q: int, n: int) -> np.ndarray:
    try:
        w = [int(v) for v in text.split()]
    except ValueError:
        raise UsageError(f"--word: expected space-separated integers, got {text!r}") from None
    if len(w) != n:
        raise UsageError(f"--word: expected {n} symbols, got {len(w)}")
    if any(not 0 <= v < q for v in w):
        raise UsageError(f"--word: symbols must be in 0..{q - 1}")
    return np.array(w, dtype=np.int64)


def _dotted(p) -> str:
    return ".".join(str(int(v)) for v in p)


# geometry ------------------------------------------------------------------


def cmd_geometry(args) -> int:
    ordering = enumerate_points(args.q, args.m)
    if args.lines:
        for line in all_lines(ordering):
            print(" ".join(_dotted(ordering.point(i)) for i in line))
    elif args.planes:
        if args.m < 3:
            raise UsageError("--planes needs m >= 3")
        for plane in all_planes(ordering):
            print(" ".join(_dotted(ordering.point(i)) for i in plane))
    else:
        for i in range(ordering.n):
            print(f"{i} {_dotted(ordering.point(i))}")
    return EXIT_OK


def cmd_components(args) -> int:
    h = hamming_code(args.q, args.m)
    delta = _point(args.delta)
    try:
        basis = component_basis(h, delta)
    except ValueError as exc:
        raise UsageError(f"--delta: {exc}") from None
    print(f"dim R_{_dotted(delta)} = {basis.dim}")
    for row in basis.rows:
        print(format_word(row))
    return EXIT_OK


# constructions ---------------------------------------------------------------


def cmd_embed(args) -> int:
    cf = read_code(args.code)
    if cf.q != args.q:
        raise UsageError(f"--q {args.q} does not match the code file (q={cf.q})")
    if cf.n != args.m - 1:
        raise UsageError(f"--m {args.m} needs words of length {args.m - 1}, file has n={cf.n}")
    spec = build_embedding(create_field(args.q), cf.words, args.m)
    print(f"n = {spec.n}")
    print(f"|C_dot| = {len(spec.deltas)}")
    if args.oracle_only or spec.q**spec.code.dimension > args.cap:
        save_construction(args.out, spec)
        print(f"wrote construction description to {args.out}")
    else:
        words = enumerate_embedded(spec, args.cap)
        save_code(args.out, spec.field, words, spec.n)
        print(f"wrote {words.shape[0]} words to {args.out}")
    ok = shorten(spec) == set(spec.words)
    print(f"shorten: {'OK' if ok else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_embed_partition(args) -> int:
    pf = read_partition(args.partition)
    if pf.q != args.q:
        raise UsageError(f"--q {args.q} does not match the partition file (q={pf.q})")
    if pf.n != args.s:
        raise UsageError(f"--s {args.s} does not match the partition file (n={pf.n})")
    spec = build_partition(create_field(args.q), [words for _, words in pf.parts], args.s)
    count = len(spec.labels)
    print(f"n = {spec.n}")
    print(f"parts = {count} = (q-1)n+1 = {(spec.q - 1) * spec.n + 1}")
    if args.oracle_only or spec.q**spec.code.dimension > args.cap:
        save_construction(args.out, spec)
        print(f"wrote construction description to {args.out}")
    else:
        parts = [(str(lab), enumerate_part(spec, lab, args.cap)) for lab in spec.labels]
        write_partition(args.out, spec.q, spec.n, parts)
        print(f"wrote {count} parts to {args.out}")
    ok = True
    for j, ((name, _), code) in enumerate(zip(pf.parts, spec.codes), start=1):
        good = shorten_part(spec, j) == set(code)
        ok &= good
        print(f"P{j} ({name}) shorten: {'OK' if good else 'FAIL'}")
    return EXIT_OK if ok else EXIT_FAIL


# verify ----------------------------------------------------------------------


def _report(rep) -> int:
    print(rep.summary())
    if not rep.passed:
        print(f"witness: {rep.witness}")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_verify_perfect(args) -> int:
    if args.code:
        cf = read_code(args.code)
        q, n = cf.q, cf.n
        member = explicit_oracle(cf.words, q, n)
    else:
        spec = load_construction(args.construction)
        if not isinstance(spec, EmbeddingSpec):
            raise UsageError("verify perfect --construction needs an embedding description")
        q, n = spec.q, spec.n
        member = spec.contains
    if args.sampled is None and q**n <= args.cap:
        rep = is_perfect_exhaustive(member, q, n, args.cap)
    else:
        rep = is_perfect_sampled(member, q, n, args.sampled or DEFAULT_TRIALS, args.seed)
    return _report(rep)


def cmd_verify_1code(args) -> int:
    return _report(is_one_code(read_code(args.code).words))


def cmd_verify_partition(args) -> int:
    trials = args.sampled
    if args.partition:
        pf = read_partition(args.partition)
        q, n = pf.q, pf.n
        oracles = [explicit_oracle(words, q, n) for _, words in pf.parts]
        labels = list(range(len(oracles)))

        def cls(ws):
            out = np.full(ws.shape[0], -1, dtype=np.int64)
            for pos in reversed(labels):
                out[oracles[pos](ws)] = pos
            return out

        def contains(pos, ws):
            return oracles[pos](ws)

    else:
        spec = load_construction(args.construction)
        if not isinstance(spec, PartitionSpec):
            raise UsageError("verify partition --construction needs a partition description")
        q, n = spec.q, spec.n
        labels = list(range(len(spec.labels)))

        def cls(ws):
            return classify_batch(spec, ws)

        def contains(pos, ws):
            return part_contains(spec, pos, ws)

    if trials is None and q**n > args.cap:
        trials = DEFAULT_TRIALS
    return _report(is_partition(cls, contains, labels, q, n, args.cap, trials, args.seed))


def cmd_classify(args) -> int:
    spec = load_construction(args.spec)
    if not isinstance(spec, PartitionSpec):
        raise UsageError("classify needs a partition description")
    print(classify(spec, _word(args.word, spec.q, spec.n)))
    return EXIT_OK


def cmd_contains(args) -> int:
    spec = load_construction(args.spec)
    w = _word(args.word, spec.q, spec.n)
    if isinstance(spec, EmbeddingSpec):
        if args.label:
            raise UsageError("--label applies to partition descriptions only")
        result = embedded_contains(spec, w)
    else:
        if not args.label:
            raise UsageError("--label is required for a partition description")
        try:
            result = part_contains(spec, args.label, w)
        except ValueError as exc:
            raise UsageError(f"--label: {exc}") from None
    print("true" if result else "false")
    return EXIT_OK


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="perfembed",
        description="Embed q-ary 1-codes and partitions into 1-perfect codes.",
    )
    parser.add_argument("--threads", type=int, default=0, help="numba threads (wall time only)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("geometry", help="points, lines or planes of PG(m-1,q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--points", action="store_true")
    g.add_argument("--lines", action="store_true")
    g.add_argument("--planes", action="store_true")
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("components", help="echelon basis of a linear component")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", required=True, help='point as "a.b.c"')
    p.set_defaults(func=cmd_components)

    p = sub.add_parser("embed", help="embed a 1-code into a 1-perfect code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--code", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--oracle-only", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("embed-partition", help="embed a partition into 1-codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--oracle-only", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_embed_partition)

    p = sub.add_parser("verify", help="run a verifier")
    vsub = p.add_subparsers(dest="what", required=True)
    v = vsub.add_parser("perfect")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--code")
    src.add_argument("--construction")
    v.add_argument("--sampled", type=int, metavar="TRIALS")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cap", type=int, default=DEFAULT_CAP)
    v.set_defaults(func=cmd_verify_perfect)
    v = vsub.add_parser("1code")
    v.add_argument("--code", required=True)
    v.set_defaults(func=cmd_verify_1code)
    v = vsub.add_parser("partition")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--partition")
    src.add_argument("--construction")
    v.add_argument("--sampled", type=int, metavar="TRIALS")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cap", type=int, default=DEFAULT_CAP)
    v.set_defaults(func=cmd_verify_partition)

    p = sub.add_parser("classify", help="label of the part containing a word")
    p.add_argument("--spec", required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("contains", help="membership oracle")
    p.add_argument("--spec", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--label")
    p.set_defaults(func=cmd_contains)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.threads:
        _accel.set_threads(args.threads)
    if getattr(args, "sampled", None) is not None and args.sampled < 1:
        print("error: --sampled TRIALS must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ParseError, UnsupportedOrderError, NotAOneCodeError, NotAPartitionError,
            CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
