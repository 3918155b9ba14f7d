"""Compact string encoding and the line-oriented corpus and seed files.

A design whose leave sits in the standard position is written as the third
points of its triples, taken in order of (first, second) point, one character
each: ``0``-``9`` then ``a``, ``b``, ...  Corpus files carry one such string
per line under a ``# mmpts v=<n> type=<Q|N|-> leave=<pairs>`` header.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .design import Claim, Design, DesignError, Pair, Pbd35, pair, triple, validate
from .search import Seed
from .seeds import canonical_leave

ALPHABET = "0123456789abcdefghijklmnopqrstuvwxyz"
_VALUE = {c: i for i, c in enumerate(ALPHABET)}

PBD_LEAVE: frozenset[Pair] = frozenset((a, b) for a in range(5) for b in range(a + 1, 5))


class CodecError(DesignError):
    code = "CodecError"


class NonCanonicalLeave(CodecError):
    code = "NonCanonicalLeave"


class MalformedString(CodecError):
    code = "MalformedString"


class LengthMismatch(CodecError):
    code = "LengthMismatch"


class BadHeader(CodecError):
    code = "BadHeader"


def point_char(x: int) -> str:
    if not 0 <= x < len(ALPHABET):
        raise ValueError(f"point {x} has no single-character code")
    return ALPHABET[x]


def format_pairs(pairs: Iterable[Pair]) -> str:
    return ",".join(point_char(a) + point_char(b) for a, b in sorted(pairs))


def parse_pairs(text: str) -> frozenset[Pair]:
    if text in ("", "-"):
        return frozenset()
    out = set()
    for item in text.split(","):
        if len(item) != 2 or item[0] not in _VALUE or item[1] not in _VALUE:
            raise BadHeader(f"bad pair {item!r}")
        out.add(pair(_VALUE[item[0]], _VALUE[item[1]]))
    return frozenset(out)


def format_triple(t: Sequence[int]) -> str:
    return "".join(point_char(x) for x in t)


def payload_length(v: int, leave: Iterable[Pair]) -> int:
    n = v * (v - 1) // 2 - len(frozenset(leave))
    if n % 3:
        raise LengthMismatch(f"{n} non-leave pairs cannot be split into triples")
    return n // 3


def encode(design: Design, leave: Iterable[Pair] | None = None) -> str:
    """Third entries of the triples sorted by (first, second)."""
    want = canonical_leave(design.v) if leave is None else frozenset(leave)
    if design.leave != want:
        raise NonCanonicalLeave(
            f"leave {format_pairs(design.leave)} is not {format_pairs(want)}"
        )
    return "".join(point_char(c) for _, _, c in design.triples)


def decode(s: str, v: int, leave: Iterable[Pair] | None = None) -> Design:
    """Rebuild a design: each character completes the least uncovered pair."""
    leave = canonical_leave(v) if leave is None else frozenset(pair(*p) for p in leave)
    n = payload_length(v, leave)
    if len(s) != n:
        raise LengthMismatch(f"payload has {len(s)} characters, expected {n}")
    used = [[False] * v for _ in range(v)]
    for a, b in leave:
        used[a][b] = used[b][a] = True
    ts = []
    i, j = 0, 1
    for pos, ch in enumerate(s):
        while i < v - 1 and used[i][j]:
            j += 1
            if j == v:
                i += 1
                j = i + 1
        if i >= v - 1:
            raise MalformedString(f"character {pos}: no uncovered pair left")
        k = _VALUE.get(ch)
        if k is None or k >= v:
            raise MalformedString(f"character {pos}: {ch!r} is not a point of order {v}")
        if k <= j or used[i][k] or used[j][k]:
            raise MalformedString(f"character {pos}: triple {i},{j},{k} reuses a pair or is out of order")
        for a, b in ((i, j), (i, k), (j, k)):
            used[a][b] = used[b][a] = True
        ts.append((i, j, k))
    return Design._trusted(v, tuple(sorted(ts)))


def parse_triples_line(line: str, v: int) -> list[tuple[int, int, int]]:
    out = []
    for tok in line.split():
        if len(tok) != 3 or any(c not in _VALUE for c in tok):
            raise MalformedString(f"bad triple {tok!r}")
        t = triple(*(_VALUE[c] for c in tok))
        if t[2] >= v or len(set(t)) != 3:
            raise MalformedString(f"bad triple {tok!r} for order {v}")
        out.append(t)
    return out


# -- corpus files --------------------------------------------------------------


@dataclass
class Corpus:
    """Designs of one order sharing one leave, as stored in a file."""

    v: int
    designs: list[Design]
    type_tag: str = "-"
    leave: frozenset[Pair] = field(default=frozenset())
    kind: str = "mmpts"

    def __len__(self) -> int:
        return len(self.designs)

    def __iter__(self):
        return iter(self.designs)


def corpus_for(v: int, designs: Sequence[Design], type_tag: str = "-", kind: str = "mmpts") -> Corpus:
    leave = PBD_LEAVE if kind == "pbd" else canonical_leave(v)
    return Corpus(v, list(designs), type_tag, leave, kind)


def _parse_header(line: str, lineno: int = 1) -> dict[str, str]:
    parts = line.split()
    if len(parts) < 2 or parts[0] != "#" or parts[1] not in ("mmpts", "pbd", "seed"):
        raise BadHeader(f"line {lineno}: expected '# mmpts v=...' header, got {line.strip()!r}")
    fields = {"kind": parts[1]}
    for p in parts[2:]:
        if "=" not in p:
            raise BadHeader(f"line {lineno}: bad header field {p!r}")
        k, val = p.split("=", 1)
        fields[k] = val
    try:
        fields["v"] = str(int(fields["v"]))
    except (KeyError, ValueError):
        raise BadHeader(f"line {lineno}: header lacks an integer v") from None
    return fields


def header_line(corpus: Corpus) -> str:
    leave = format_pairs(corpus.leave) or "-"
    return f"# {corpus.kind} v={corpus.v} type={corpus.type_tag} leave={leave}"


def write_corpus(corpus: Corpus, out: TextIO) -> None:
    out.write(header_line(corpus) + "\n")
    for d in corpus.designs:
        out.write(encode(d, corpus.leave) + "\n")


def read_corpus(src: TextIO, validate_designs: bool = True) -> Corpus:
    first = src.readline()
    if not first:
        raise BadHeader("line 1: empty file")
    fields = _parse_header(first)
    if fields["kind"] == "seed":
        raise BadHeader("line 1: this is a seed file")
    v = int(fields["v"])
    leave = parse_pairs(fields.get("leave", "-"))
    tag = fields.get("type", "-")
    if tag not in ("Q", "N", "-"):
        raise BadHeader(f"line 1: unknown type tag {tag!r}")
    designs = []
    for lineno, line in enumerate(src, start=2):
        s = line.strip()
        if not s:
            continue
        try:
            d = decode(s, v, leave)
            if validate_designs:
                _check_line(d, fields["kind"], leave)
        except DesignError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from None
        designs.append(d)
    return Corpus(v, designs, tag, leave, fields["kind"])


def _check_line(d: Design, kind: str, leave: frozenset[Pair]) -> None:
    if kind == "pbd":
        Pbd35(d.v, d.triples, tuple(sorted({x for p in leave for x in p}))).check()
    else:
        validate(d, Claim.MMPTS).raise_first()


def write_file(path: str | Path, corpus: Corpus) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        write_corpus(corpus, fh)


def read_file(path: str | Path, validate_designs: bool = True) -> Corpus:
    with open(path, encoding="utf-8") as fh:
        return read_corpus(fh, validate_designs)


def dumps(corpus: Corpus) -> str:
    buf = io.StringIO()
    write_corpus(corpus, buf)
    return buf.getvalue()


def loads(text: str) -> Corpus:
    return read_corpus(io.StringIO(text))


# -- seed files ------------------------------------------------------------------


def write_seeds(seeds: Iterable[Seed], out: TextIO) -> None:
    for s in seeds:
        name = s.name or "-"
        out.write(f"# seed v={s.v} name={name} leave={format_pairs(s.leave) or '-'}\n")
        out.write(" ".join(format_triple(t) for t in s.fixed_triples) + "\n")


def read_seeds(src: TextIO) -> list[Seed]:
    seeds = []
    lines = [ln for ln in src.read().splitlines()]
    i = 0
    while i < len(lines):
        if not lines[i].strip():
            i += 1
            continue
        fields = _parse_header(lines[i], i + 1)
        if fields["kind"] != "seed":
            raise BadHeader(f"line {i + 1}: expected a '# seed' header")
        v = int(fields["v"])
        body = lines[i + 1] if i + 1 < len(lines) else ""
        try:
            ts = parse_triples_line(body, v)
        except DesignError as exc:
            raise MalformedString(f"line {i + 2}: {exc}") from None
        name = fields.get("name", "-")
        seeds.append(Seed(v, tuple(ts), parse_pairs(fields.get("leave", "-")), "" if name == "-" else name).check())
        i += 2
    return seeds
