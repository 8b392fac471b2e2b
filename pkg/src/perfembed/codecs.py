"""Plain-text formats for codes, partitions and construction descriptions.

Code file::

    q=2 n=3
    0 0 0
    1 1 1

Partition file: header ``q=<q> n=<n> parts=<count>``, then blocks opened by
``part <label>`` lines. Construction file: enough to rebuild a construction
deterministically when the code itself is too large to write out::

    construction=embedding q=4 m=4 words=4
    0 0 0
    ...

    construction=partition q=2 s=3 codes=4
    code 1 anchor=0.0.0
    0 0 0
    ...

Lines starting with ``#`` and blank lines are ignored everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .embed import EmbeddingSpec, build_embedding
from .exceptions import ParseError, UnsupportedOrderError
from .gf import FieldSpec, create_field
from .partition import PartitionSpec, build_partition

Word = tuple[int, ...]


@dataclass
class CodeFile:
    q: int
    n: int
    words: set[Word] = field(default_factory=set)


@dataclass
class PartitionFile:
    q: int
    n: int
    parts: list[tuple[str, list[Word]]] = field(default_factory=list)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield no, line


def _header(line: str, no: int, required: tuple[str, ...]) -> dict[str, str]:
    fields = {}
    for tok in line.split():
        if "=" not in tok:
            raise ParseError(f"expected key=value in header, got {tok!r}", no)
        key, _, val = tok.partition("=")
        fields[key] = val
    for key in required:
        if key not in fields:
            raise ParseError(f"header is missing {key}=", no)
    return fields


def _int(val: str, what: str, no: int) -> int:
    try:
        return int(val)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {val!r}", no) from None


def _field(q: int, no: int) -> FieldSpec:
    try:
        return create_field(q)
    except UnsupportedOrderError as exc:
        raise ParseError(str(exc), no) from None


def parse_word(line: str, q: int, n: int, no: int | None = None) -> Word:
    toks = line.split()
    if len(toks) != n:
        raise ParseError(f"expected {n} symbols, got {len(toks)}", no)
    word = tuple(_int(t, "symbol", no) for t in toks)
    for v in word:
        if not 0 <= v < q:
            raise ParseError(f"symbol {v} out of range 0..{q - 1}", no)
    return word


def format_word(w) -> str:
    return " ".join(str(int(v)) for v in w)


def parse_code(text: str) -> CodeFile:
    it = _lines(text)
    try:
        no, line = next(it)
    except StopIteration:
        raise ParseError("empty code file", 1) from None
    hdr = _header(line, no, ("q", "n"))
    q, n = _int(hdr["q"], "q", no), _int(hdr["n"], "n", no)
    _field(q, no)
    out = CodeFile(q, n)
    for no, line in it:
        w = parse_word(line, q, n, no)
        if w in out.words:
            raise ParseError(f"duplicate word {format_word(w)}", no)
        out.words.add(w)
    return out


def read_code(path) -> CodeFile:
    return parse_code(Path(path).read_text(encoding="utf-8"))


def load_code(path) -> tuple[FieldSpec, set[Word]]:
    cf = read_code(path)
    return create_field(cf.q), cf.words


def format_code(q: int, n: int, words) -> str:
    rows = sorted(tuple(int(v) for v in w) for w in words)
    return "".join([f"q={q} n={n}\n", *(format_word(w) + "\n" for w in rows)])


def save_code(path, f: FieldSpec | int, words, n: int | None = None) -> None:
    """Write words in lexicographic order. ``n`` is needed only for an empty code."""
    q = f.q if isinstance(f, FieldSpec) else int(f)
    words = [tuple(int(v) for v in w) for w in words]
    if n is None:
        if not words:
            raise ValueError("word length unknown for an empty code; pass n")
        n = len(words[0])
    Path(path).write_text(format_code(q, n, words), encoding="utf-8", newline="\n")


def parse_partition(text: str) -> PartitionFile:
    it = _lines(text)
    try:
        no, line = next(it)
    except StopIteration:
        raise ParseError("empty partition file", 1) from None
    hdr = _header(line, no, ("q", "n", "parts"))
    q, n, count = (_int(hdr[k], k, no) for k in ("q", "n", "parts"))
    _field(q, no)
    out = PartitionFile(q, n)
    seen_labels: set[str] = set()
    for no, line in it:
        if line.startswith("part"):
            toks = line.split()
            if len(toks) != 2 or toks[0] != "part":
                raise ParseError("expected 'part <label>'", no)
            if toks[1] in seen_labels:
                raise ParseError(f"duplicate part label {toks[1]}", no)
            seen_labels.add(toks[1])
            out.parts.append((toks[1], []))
            continue
        if not out.parts:
            raise ParseError("word before the first 'part' line", no)
        out.parts[-1][1].append(parse_word(line, q, n, no))
    if len(out.parts) != count:
        raise ParseError(f"header says {count} parts, found {len(out.parts)}")
    return out


def read_partition(path) -> PartitionFile:
    return parse_partition(Path(path).read_text(encoding="utf-8"))


def write_partition(path, q: int, n: int, parts) -> None:
    """``parts`` is a sequence of (label, words) pairs, written in the given order."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"q={q} n={n} parts={len(parts)}\n")
        for label, words in parts:
            fh.write(f"part {label}\n")
            for w in np.asarray(words).reshape(-1, n):
                fh.write(format_word(w) + "\n")


def format_construction(spec: EmbeddingSpec | PartitionSpec) -> str:
    if isinstance(spec, EmbeddingSpec):
        lines = [f"construction=embedding q={spec.q} m={spec.m} n={spec.n} words={len(spec.words)}"]
        lines += [format_word(w) for w in spec.words]
    else:
        lines = [f"construction=partition q={spec.q} s={spec.s} n={spec.n} codes={spec.k}"]
        for j, (code, y) in enumerate(zip(spec.codes, spec.anchors), start=1):
            lines.append(f"code {j} anchor={'.'.join(map(str, y))}")
            lines += [format_word(w) for w in code]
    return "\n".join(lines) + "\n"


def save_construction(path, spec: EmbeddingSpec | PartitionSpec) -> None:
    Path(path).write_text(format_construction(spec), encoding="utf-8", newline="\n")


def parse_construction(text: str) -> EmbeddingSpec | PartitionSpec:
    it = _lines(text)
    try:
        no, line = next(it)
    except StopIteration:
        raise ParseError("empty construction file", 1) from None
    hdr = _header(line, no, ("construction", "q"))
    q = _int(hdr["q"], "q", no)
    f = _field(q, no)
    kind = hdr["construction"]
    if kind == "embedding":
        if "m" not in hdr:
            raise ParseError("header is missing m=", no)
        m = _int(hdr["m"], "m", no)
        words = [parse_word(line, q, m - 1, no) for no, line in it]
        if "words" in hdr and len(words) != _int(hdr["words"], "words", no):
            raise ParseError("word count does not match header")
        return build_embedding(f, words, m)
    if kind == "partition":
        if "s" not in hdr:
            raise ParseError("header is missing s=", no)
        s = _int(hdr["s"], "s", no)
        codes: list[list[Word]] = []
        anchors: list[Word | None] = []
        for no, line in it:
            if line.startswith("code"):
                toks = line.split()
                anchor = None
                for tok in toks[2:]:
                    if tok.startswith("anchor="):
                        anchor = tuple(_int(v, "anchor", no) for v in tok[7:].split("."))
                codes.append([])
                anchors.append(anchor)
                continue
            if not codes:
                raise ParseError("word before the first 'code' line", no)
            codes[-1].append(parse_word(line, q, s, no))
        spec = build_partition(f, codes, s)
        for j, a in enumerate(anchors):
            if a is not None and a != spec.anchors[j]:
                raise ParseError(f"anchor of code {j + 1} is {a}, rebuild gives {spec.anchors[j]}")
        return spec
    raise ParseError(f"unknown construction {kind!r}", no)


def load_construction(path) -> EmbeddingSpec | PartitionSpec:
    return parse_construction(Path(path).read_text(encoding="utf-8"))
