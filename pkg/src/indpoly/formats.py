"""graph6 and plain edge-list readers/writers."""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .graph import Graph, GraphError, make_graph

HEADER = ">>graph6<<"
_INT = re.compile(r"-?[0-9]+")


class ParseError(ValueError):
    """Malformed input; the message carries the location."""


def _size_bytes(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def write_graph6(G: Graph) -> str:
    data = _size_bytes(G.n)
    bitstream = [G.adj[j] >> i & 1 for j in range(1, G.n) for i in range(j)]
    bitstream += [0] * (-len(bitstream) % 6)
    for i in range(0, len(bitstream), 6):
        chunk = 0
        for b in bitstream[i : i + 6]:
            chunk = chunk << 1 | b
        data.append(chunk)
    return "".join(chr(c + 63) for c in data)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 string; a leading ``>>graph6<<`` header is tolerated."""
    s = line.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :]
    if not s:
        raise ParseError("graph6: empty input")
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"graph6: character {ch!r} at position {pos} outside '?'..'~'")
    data = [ord(c) - 63 for c in s]
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise ParseError("graph6: truncated 8-byte size header")
        n = 0
        for d in data[2:8]:
            n = n << 6 | d
        body = data[8:]
        if n < 258048:
            raise ParseError("graph6: non-canonical long size header")
    else:
        if len(data) < 4:
            raise ParseError("graph6: truncated 4-byte size header")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
        if n < 63:
            raise ParseError("graph6: non-canonical 4-byte size header")
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(body) != expected:
        kind = "trailing data" if len(body) > expected else "truncated adjacency data"
        raise ParseError(f"graph6: {kind} ({len(body)} bytes for n={n}, expected {expected})")
    pad = expected * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise ParseError("graph6: nonzero padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a graph6 file: one graph per nonblank line."""
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None


def parse_edge_list(text: str) -> Graph:
    """``n <count>`` on the first line, then one 0-based ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored.
    """
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>', got {raw.strip()!r}")
            n = _int(fields[1], lineno)
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        u, v = _int(fields[0], lineno), _int(fields[1], lineno)
        if u == v:
            raise ParseError(f"line {lineno}: loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: edge ({u}, {v}) out of range 0..{n - 1}")
        edges.append((u, v))
    if n is None:
        raise ParseError("edge list: missing 'n <count>' header")
    try:
        return make_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def _int(token: str, lineno: int) -> int:
    if not _INT.fullmatch(token):
        raise ParseError(f"line {lineno}: {token!r} is not an integer")
    return int(token)


def write_edge_list(G: Graph) -> str:
    return "\n".join([f"n {G.n}"] + [f"{u} {v}" for u, v in G.edges()]) + "\n"
