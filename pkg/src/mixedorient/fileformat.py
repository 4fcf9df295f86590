"""Line-oriented text format for mixed multigraphs.

::

    c any comment
    p mixed <n> <m>
    e <u> <v>      undirected edge
    a <u> <v>      arc u -> v

Vertex ids are 0-based. Edge ids follow record order. Blank lines and
``c`` lines may appear anywhere.
"""

from __future__ import annotations

from .errors import GraphSyntaxError, IndexOutOfRange, SelfLoop
from .graph import MixedMultigraph


def _int(tok, lineno, what):
    try:
        value = int(tok)
    except ValueError:
        raise GraphSyntaxError(f"{what} must be an integer, got {tok!r}", lineno) from None
    if value < 0:
        raise GraphSyntaxError(f"{what} must be non-negative, got {value}", lineno)
    return value


def parse_graph(text: str) -> MixedMultigraph:
    n = m = None
    header_line = 0
    triples = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        toks = line.split()
        kind = toks[0]
        if kind == "p":
            if n is not None:
                raise GraphSyntaxError("duplicate problem line", lineno)
            if len(toks) != 4 or toks[1] != "mixed":
                raise GraphSyntaxError("expected 'p mixed <n> <m>'", lineno)
            n = _int(toks[2], lineno, "vertex count")
            m = _int(toks[3], lineno, "edge count")
            header_line = lineno
        elif kind in ("e", "a"):
            if n is None:
                raise GraphSyntaxError("edge record before problem line", lineno)
            if len(toks) != 3:
                raise GraphSyntaxError(f"expected '{kind} <u> <v>'", lineno)
            u = _int(toks[1], lineno, "vertex id")
            v = _int(toks[2], lineno, "vertex id")
            for x in (u, v):
                if x >= n:
                    raise IndexOutOfRange(f"vertex {x} out of range for n = {n}", lineno)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}", lineno)
            if len(triples) == m:
                raise GraphSyntaxError(f"more than {m} edge records", lineno)
            triples.append((u, v, kind == "a"))
        else:
            raise GraphSyntaxError(f"unknown record type {kind!r}", lineno)
    if n is None:
        raise GraphSyntaxError("missing problem line", 1)
    if n == 0:
        raise GraphSyntaxError("graph must have at least one vertex", header_line)
    if len(triples) != m:
        raise GraphSyntaxError(f"expected {m} edge records, found {len(triples)}", header_line)
    return MixedMultigraph(n, triples)


def emit(g: MixedMultigraph, comments: tuple[str, ...] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p mixed {g.n} {g.m}")
    for e in g.edges:
        lines.append(f"{'a' if e.directed else 'e'} {e.tail} {e.head}")
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> MixedMultigraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())
