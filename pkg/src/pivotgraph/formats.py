"""Text formats for graphs, operation sequences, and vertex sets.

Edge-list documents (read/write), one statement per line:

    # comment, blank lines ignored; inline comments allowed
    vertex a        declare an isolated vertex
    loop b          put a loop on b (declares b)
    a b             edge between a and b (declares both)

Vertex tokens are arbitrary whitespace-free strings other than the two
keywords.  Re-declaring an edge or a loop is an error.  Canonical output
lists vertex lines, then loop lines, then edge lines, each group sorted;
the empty graph serializes to the empty document.

graph6 documents (read only) follow the standard encoding: optional
``>>graph6<<`` header, order byte(s), then the upper triangle packed in
column order, six bits per byte, each byte offset by 63.  Vertices are
named "0".."n-1".

Operation sequences use bracket groups: ``[u v]`` is a pivot, ``[w]`` the
loop rule.  Vertex sets are comma-separated tokens; the empty string is the
empty set.
"""

from __future__ import annotations

import re

from .errors import InputError, ParseError
from .graph import Graph
from .sequences import LocalComp, Pivot

__all__ = [
    "GRAPH_FORMATS",
    "parse_graph",
    "serialize_graph",
    "parse_opseq",
    "serialize_opseq",
    "parse_vertex_set",
]

GRAPH_FORMATS = ("edge-list", "graph6")

_KEYWORDS = ("vertex", "loop")


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse a graph document in the named format."""
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "graph6":
        return _parse_graph6(text)
    raise InputError(f"unknown graph format: {fmt!r}")


def _vertex_id(tok: str, lineno: int) -> str:
    # keywords in vertex position would not survive re-serialization
    if tok in _KEYWORDS:
        raise ParseError(f"keyword {tok!r} cannot name a vertex", line=lineno)
    return tok


def _parse_edge_list(text: str) -> Graph:
    vertices = set()
    edges = set()
    loops = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if tokens[0] in _KEYWORDS:
            if len(tokens) != 2:
                raise ParseError(
                    f"'{tokens[0]}' takes exactly one vertex", line=lineno
                )
            v = _vertex_id(tokens[1], lineno)
            if tokens[0] == "vertex":
                vertices.add(v)
            else:
                if v in loops:
                    raise ParseError(f"duplicate loop on {v!r}", line=lineno)
                loops.add(v)
            continue
        if len(tokens) != 2:
            raise ParseError(
                f"expected 'u v', 'loop v', or 'vertex v', got {len(tokens)} tokens",
                line=lineno,
            )
        u, v = (_vertex_id(t, lineno) for t in tokens)
        if u == v:
            raise ParseError(
                f"self-edge {u!r} {v!r}; use 'loop {u}'", line=lineno
            )
        key = (u, v) if u < v else (v, u)
        if key in edges:
            raise ParseError(f"duplicate edge {u!r} {v!r}", line=lineno)
        edges.add(key)
    return Graph(vertices, edges, loops)


def _graph6_bytes(line: str) -> bytes:
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 data must be ascii") from None
    for pos, b in enumerate(data):
        if b < 63 or b > 126:
            raise ParseError(f"invalid graph6 byte at offset {pos}")
    return data


def _parse_graph6(text: str) -> Graph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError(f"expected one graph6 line, got {len(lines)}")
    line = lines[0]
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    data = _graph6_bytes(line)
    if not data:
        raise ParseError("empty graph6 payload")
    if data[0] != 126:
        n = data[0] - 63
        idx = 1
    elif len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise ParseError("truncated graph6 order")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        idx = 4
    else:
        if len(data) < 8:
            raise ParseError("truncated graph6 order")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        idx = 8
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - idx != nbytes:
        raise ParseError(
            f"graph6 payload has {len(data) - idx} data byte(s), expected {nbytes}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = data[idx + k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((str(i), str(j)))
            k += 1
    return Graph((str(i) for i in range(n)), edges)


def _token(label) -> str:
    tok = str(label)
    if not tok or tok.split() != [tok] or "#" in tok or tok in _KEYWORDS:
        raise InputError(f"vertex id {label!r} cannot be written as a token")
    return tok


def serialize_graph(G: Graph) -> str:
    """Canonical edge-list document; round-trips through parse_graph."""
    covered = set(G.loops)
    for u, v in G.edges:
        covered.add(u)
        covered.add(v)
    lines = [f"vertex {_token(v)}" for v in G.vertices if v not in covered]
    lines += [f"loop {_token(v)}" for v in sorted(G.loops)]
    lines += [f"{_token(u)} {_token(v)}" for u, v in G.edges]
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


_BRACKET = re.compile(r"\[([^\[\]]*)\]")


def parse_opseq(text: str):
    """Parse bracket groups into a tuple of operations."""
    ops = []
    rest = _BRACKET.sub(" ", text)
    if rest.split():
        raise ParseError(f"stray text outside brackets: {rest.split()[0]!r}")
    for m in _BRACKET.finditer(text):
        tokens = m.group(1).split()
        if len(tokens) == 1:
            ops.append(LocalComp(tokens[0]))
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise ParseError(f"pivot endpoints must differ: {m.group(0)}")
            ops.append(Pivot(tokens[0], tokens[1]))
        else:
            raise ParseError(
                f"bracket group needs one or two vertices: {m.group(0)}"
            )
    return tuple(ops)


def serialize_opseq(seq) -> str:
    """Bracket-group form of a sequence; inverse of parse_opseq."""
    parts = []
    for op in seq:
        if isinstance(op, Pivot):
            parts.append(f"[{_token(op.u)} {_token(op.v)}]")
        elif isinstance(op, LocalComp):
            parts.append(f"[{_token(op.u)}]")
        else:
            raise InputError(f"not an operation: {op!r}")
    return " ".join(parts)


def parse_vertex_set(text: str) -> frozenset:
    """Comma-separated vertex tokens; the empty string is the empty set."""
    if not text.strip():
        return frozenset()
    out = []
    for part in text.split(","):
        tok = part.strip()
        if not tok:
            raise ParseError(f"empty vertex token in set: {text!r}")
        out.append(tok)
    return frozenset(out)
