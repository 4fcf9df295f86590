"""Shortest cycles through edges, and the statistics built on them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import NoCycle, NoSuchEdge
from .graph import INF, MixedMultigraph, bfs_tree, distance


@dataclass(frozen=True)
class CycleWitness:
    """A closed walk using the query edge exactly once.

    ``vertices`` has ``length + 1`` entries with ``vertices[0] == vertices[-1]``;
    edge ``edge_ids[i]`` is traversed from ``vertices[i]`` to ``vertices[i+1]``.
    """

    length: int
    edge_ids: tuple[int, ...]
    vertices: tuple[int, ...]


def _return_path(g, start, end, skip):
    """Edge ids and vertices of a BFS-shortest start->end path avoiding ``skip``."""
    dist, parent = bfs_tree(g.out_adj, g.n, start, skip)
    if dist[end] == INF:
        return None
    eids = []
    verts = [end]
    x = end
    while x != start:
        eid = parent[x]
        eids.append(eid)
        x = g.edges[eid].other(x)
        verts.append(x)
    eids.reverse()
    verts.reverse()
    return eids, verts


def cycle_length(g: MixedMultigraph, eid: int) -> float:
    """Length of a shortest closed walk through edge ``eid`` (``INF`` if none)."""
    e = g.edges[eid]
    if e.is_loop():
        raise ValueError(f"edge {eid} is a self-loop")
    if e.directed:
        return 1 + distance(g, e.head, e.tail, skip=eid)
    return 1 + min(distance(g, e.head, e.tail, skip=eid), distance(g, e.tail, e.head, skip=eid))


def shortest_cycle_through_edge(g: MixedMultigraph, eid: int) -> CycleWitness:
    e = g.edges[eid]
    if e.is_loop():
        raise ValueError(f"edge {eid} is a self-loop")
    # candidate traversals of e as (from, to); undirected edges try both
    options = [(e.tail, e.head)]
    if not e.directed:
        options.append((e.head, e.tail))
    best = None
    for p, q in options:
        back = _return_path(g, q, p, eid)
        if back is None:
            continue
        if best is None or len(back[0]) < len(best[1][0]):
            best = ((p, q), back)
    if best is None:
        raise NoCycle(f"edge {eid} lies on no cycle")
    (p, _q), (eids, verts) = best
    return CycleWitness(1 + len(eids), (eid, *eids), (p, *verts))


def l_value(g: MixedMultigraph, u: int, v: int) -> int:
    """Shortest cycle length over all edges joining ``u`` and ``v``."""
    between = g.edges_between(u, v)
    if not between:
        raise NoSuchEdge(f"no edge between {u} and {v}")
    best = min(cycle_length(g, e.id) for e in between)
    if best == INF:
        raise NoCycle(f"no edge between {u} and {v} lies on a cycle")
    return int(best)


def s_value(g: MixedMultigraph, u: int, xs: Iterable[int]) -> int:
    return sum(l_value(g, u, v) for v in xs)


def eta(g: MixedMultigraph) -> int:
    """Smallest k such that every edge lies on a cycle of length at most k."""
    lengths = [cycle_length(g, e.id) for e in g.edges if not e.is_loop()]
    if not lengths:
        raise ValueError("graph has no edges")
    k = max(lengths)
    if k == INF:
        raise NoCycle("some edge lies on no cycle")
    return int(k)


def is_valid_witness(g: MixedMultigraph, w: CycleWitness, eid: int) -> bool:
    """Check that ``w`` is a closed mixed walk using ``eid`` exactly once."""
    if len(w.edge_ids) != w.length or len(w.vertices) != w.length + 1:
        return False
    if w.vertices[0] != w.vertices[-1] or w.edge_ids.count(eid) != 1:
        return False
    for i, x in enumerate(w.edge_ids):
        e = g.edges[x]
        a, b = w.vertices[i], w.vertices[i + 1]
        if e.directed:
            if (a, b) != (e.tail, e.head):
                return False
        elif {a, b} != {e.tail, e.head}:
            return False
    return True
