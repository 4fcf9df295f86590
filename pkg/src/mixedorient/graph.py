"""Mixed multigraphs and the traversal metrics used everywhere else.

A mixed multigraph has vertices ``0..n-1`` and an ordered sequence of edges.
Each edge is either undirected (traversable both ways) or an arc from
``tail`` to ``head``. Parallel edges are allowed; edge ids are the positions
in the edge sequence. Graph objects are treated as immutable: every
"modification" returns a new graph with the same edge ids.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DisconnectedGraph, EmptySet

INF = math.inf


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int
    directed: bool = False

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.tail, self.head)

    def other(self, v: int) -> int:
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise ValueError(f"vertex {v} is not an endpoint of edge {self.id}")

    def is_loop(self) -> bool:
        return self.tail == self.head


class MixedMultigraph:
    """Vertices plus an ordered multiset of undirected edges and arcs.

    ``edges`` may hold :class:`Edge` objects or ``(u, v, directed)`` triples;
    ids are reassigned densely in the given order.
    """

    __slots__ = ("n", "edges", "out_adj", "in_adj", "incident")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        self.n = n
        built = []
        for i, e in enumerate(edges):
            if isinstance(e, Edge):
                u, v, directed = e.tail, e.head, e.directed
            else:
                u, v, directed = e
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {i} ({u}, {v}) has an endpoint outside 0..{n - 1}")
            built.append(Edge(i, u, v, bool(directed)))
        self.edges: tuple[Edge, ...] = tuple(built)

        out_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        in_adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        incident: list[list[int]] = [[] for _ in range(n)]
        for e in self.edges:
            u, v = e.tail, e.head
            out_adj[u].append((v, e.id))
            in_adj[v].append((u, e.id))
            incident[u].append(e.id)
            if not e.directed and u != v:
                out_adj[v].append((u, e.id))
                in_adj[u].append((v, e.id))
            if u != v:
                incident[v].append(e.id)
        for lst in out_adj:
            lst.sort()
        for lst in in_adj:
            lst.sort()
        self.out_adj = out_adj
        self.in_adj = in_adj
        self.incident = incident

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        und = sum(1 for e in self.edges if not e.directed)
        return f"MixedMultigraph(n={self.n}, m={self.m}, undirected={und})"

    def __eq__(self, other):
        if not isinstance(other, MixedMultigraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def triples(self) -> list[tuple[int, int, bool]]:
        return [(e.tail, e.head, e.directed) for e in self.edges]

    def undirected_edge_ids(self) -> list[int]:
        return [e.id for e in self.edges if not e.directed]

    def is_fully_directed(self) -> bool:
        return all(e.directed for e in self.edges)

    def has_loops(self) -> bool:
        return any(e.is_loop() for e in self.edges)

    def edges_between(self, u: int, v: int) -> list[Edge]:
        return [self.edges[i] for i in self.incident[u]
                if self.edges[i].other(u) == v and not self.edges[i].is_loop()]

    def neighbors(self, u: int) -> set[int]:
        """All vertices joined to ``u`` by an edge of any kind or direction."""
        return {self.edges[i].other(u) for i in self.incident[u]} - {u}

    def orient(self, assignments: Mapping[int, int]) -> MixedMultigraph:
        """Return a copy where each edge id in ``assignments`` becomes an arc
        pointing at the given head vertex."""
        triples = self.triples()
        for eid, head in assignments.items():
            e = self.edges[eid]
            if head not in e.endpoints:
                raise ValueError(f"vertex {head} is not an endpoint of edge {eid}")
            if e.directed:
                if head != e.head:
                    raise ValueError(f"edge {eid} is already directed towards {e.head}")
                continue
            triples[eid] = (e.other(head), head, True)
        return MixedMultigraph(self.n, triples)

    def reverse(self) -> MixedMultigraph:
        """Arc reversal; undirected edges are unchanged."""
        return MixedMultigraph(
            self.n,
            [(e.head, e.tail, True) if e.directed else (e.tail, e.head, False) for e in self.edges],
        )

    def without_edge(self, eid: int) -> MixedMultigraph:
        """Copy with edge ``eid`` removed. Ids above ``eid`` shift down by one."""
        return MixedMultigraph(self.n, [t for i, t in enumerate(self.triples()) if i != eid])


def _bfs(adj, n, s, skip=-1):
    dist = [INF] * n
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y, eid in adj[x]:
            if eid != skip and dist[y] == INF:
                dist[y] = dx
                queue.append(y)
    return dist


def bfs_tree(adj, n, s, skip=-1):
    """BFS from ``s`` returning ``(dist, parent_edge)``; ties go to the
    lowest vertex id, then lowest edge id (adjacency lists are sorted)."""
    dist = [INF] * n
    parent = [-1] * n
    dist[s] = 0
    queue = deque([s])
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y, eid in adj[x]:
            if eid != skip and dist[y] == INF:
                dist[y] = dx
                parent[y] = eid
                queue.append(y)
    return dist, parent


def distance(g: MixedMultigraph, s: int, t: int, skip: int = -1, limit: float = INF) -> float:
    """Shortest mixed-path length from ``s`` to ``t``, optionally ignoring
    the edge ``skip``. Stops as soon as ``t`` is reached, or returns ``INF``
    once the search depth passes ``limit``."""
    if s == t:
        return 0
    seen = [False] * g.n
    seen[s] = True
    frontier = [s]
    d = 0
    adj = g.out_adj
    while frontier and d < limit:
        d += 1
        nxt = []
        for x in frontier:
            for y, eid in adj[x]:
                if eid != skip and not seen[y]:
                    if y == t:
                        return d
                    seen[y] = True
                    nxt.append(y)
        frontier = nxt
    return INF


def distances_from(g: MixedMultigraph, s: int) -> list:
    """Out-distances from ``s``; unreachable vertices get ``INF``."""
    if not 0 <= s < g.n:
        raise IndexError(f"vertex {s} out of range")
    return _bfs(g.out_adj, g.n, s)


def distances_to(g: MixedMultigraph, t: int) -> list:
    """In-distances to ``t`` (BFS over reversed arcs)."""
    if not 0 <= t < g.n:
        raise IndexError(f"vertex {t} out of range")
    return _bfs(g.in_adj, g.n, t)


def out_eccentricity(g: MixedMultigraph, v: int) -> float:
    return max(distances_from(g, v))


def in_eccentricity(g: MixedMultigraph, v: int) -> float:
    return max(distances_to(g, v))


def eccentricity(g: MixedMultigraph, v: int) -> float:
    return max(out_eccentricity(g, v), in_eccentricity(g, v))


def eccentricities(g: MixedMultigraph) -> list:
    return [eccentricity(g, v) for v in range(g.n)]


def radius_center(g: MixedMultigraph) -> tuple[int, set[int]]:
    """Radius and the set of central vertices. Raises DisconnectedGraph if
    the graph is not strongly connected."""
    if g.n == 0:
        raise ValueError("empty graph has no radius")
    ecc = eccentricities(g)
    r = min(ecc)
    if r == INF:
        raise DisconnectedGraph("graph is not strongly connected")
    return int(r), {v for v, e in enumerate(ecc) if e == r}


def radius(g: MixedMultigraph) -> int:
    return radius_center(g)[0]


def diameter(g: MixedMultigraph) -> int:
    if g.n == 0:
        raise ValueError("empty graph has no diameter")
    d = max(eccentricities(g))
    if d == INF:
        raise DisconnectedGraph("graph is not strongly connected")
    return int(d)


def is_strongly_connected(g: MixedMultigraph) -> bool:
    if g.n <= 1:
        return True
    return INF not in _bfs(g.out_adj, g.n, 0) and INF not in _bfs(g.in_adj, g.n, 0)


def bridges(g: MixedMultigraph) -> set[int]:
    """Undirected edges that are cut-edges of the underlying undirected
    multigraph. Arcs are never reported."""
    n = g.n
    edges = g.edges
    disc = [-1] * n
    low = [0] * n
    found = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # frames: (vertex, edge id used to enter it, iterator position)
        stack = [(root, -1, 0)]
        while stack:
            v, via, pos = stack[-1]
            inc = g.incident[v]
            if pos < len(inc):
                stack[-1] = (v, via, pos + 1)
                eid = inc[pos]
                if eid == via:
                    continue
                w = edges[eid].other(v)
                if w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, eid, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    low[p] = min(low[p], low[v])
                    if low[v] > disc[p]:
                        found.add(via)
    return {eid for eid in found if not edges[eid].directed}


def is_strongly_orientable(g: MixedMultigraph) -> bool:
    """Strongly connected and bridgeless."""
    return is_strongly_connected(g) and not bridges(g)


@dataclass(frozen=True)
class ContractionMap:
    quotient: MixedMultigraph
    super_vertex: int
    origin_of_edge: tuple[int, ...]
    class_of_vertex: tuple[int, ...]


def contract(g: MixedMultigraph, vset: Iterable[int]) -> ContractionMap:
    """Merge ``vset`` into one vertex. Edges inside ``vset`` disappear,
    parallel edges survive. Quotient ids follow the original id order, the
    merged vertex taking the slot of ``min(vset)``."""
    vset = set(vset)
    if not vset:
        raise EmptySet("cannot contract an empty vertex set")
    rep = min(vset)
    cls = [0] * g.n
    nxt = 0
    for v in range(g.n):
        if v in vset and v != rep:
            continue
        cls[v] = nxt
        nxt += 1
    star = cls[rep]
    for v in vset:
        cls[v] = star
    triples = []
    origin = []
    for e in g.edges:
        if e.tail in vset and e.head in vset:
            continue
        triples.append((cls[e.tail], cls[e.head], e.directed))
        origin.append(e.id)
    return ContractionMap(MixedMultigraph(nxt, triples), star, tuple(origin), tuple(cls))


def underlying_components(g: MixedMultigraph, skip: int = -1) -> list[int]:
    """Component label per vertex in the underlying undirected multigraph."""
    label = [-1] * g.n
    c = 0
    for s in range(g.n):
        if label[s] != -1:
            continue
        label[s] = c
        stack = [s]
        while stack:
            x = stack.pop()
            for eid in g.incident[x]:
                if eid == skip:
                    continue
                y = g.edges[eid].other(x)
                if label[y] == -1:
                    label[y] = c
                    stack.append(y)
        c += 1
    return label


def restrict(g: MixedMultigraph, keep: Sequence[int] | set[int]) -> MixedMultigraph:
    """Same vertex set, only the listed edge ids (others dropped)."""
    keep = set(keep)
    return MixedMultigraph(g.n, [t for i, t in enumerate(g.triples()) if i in keep])
