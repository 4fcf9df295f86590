"""Exact oriented radius for small instances.

Undirected edges whose direction is forced (the other direction breaks
strong connectivity) are fixed first. The remaining free edges are searched
depth-first; a partial assignment is abandoned as soon as it is no longer
strongly connected, or once its radius (undecided edges still two-way,
hence a lower bound for every completion) reaches the best value found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .driver import Orientation
from .errors import NotStronglyOrientable, TooManyFreeEdges
from .graph import INF, MixedMultigraph, is_strongly_connected, is_strongly_orientable, radius_center

DEFAULT_MAX_FREE = 20


@dataclass(frozen=True)
class OracleResult:
    oriented_radius: int
    witness: Orientation
    explored: int  # complete assignments evaluated
    forced_count: int
    free_count: int
    nodes: int = 0  # search-tree nodes visited


class _Search:
    """Edge states: 0 two-way, 1 tail->head, 2 head->tail."""

    def __init__(self, g: MixedMultigraph):
        self.n = g.n
        self.g = g
        self.state = [0 if not e.directed else 1 for e in g.edges]
        out = [[] for _ in range(g.n)]
        inn = [[] for _ in range(g.n)]
        for e in g.edges:
            out[e.tail].append((e.head, e.id, 1))
            inn[e.head].append((e.tail, e.id, 1))
            if not e.directed:
                out[e.head].append((e.tail, e.id, 2))
                inn[e.tail].append((e.head, e.id, 2))
        self.out = out
        self.inn = inn

    def _reach(self, adj, s):
        state = self.state
        dist = [INF] * self.n
        dist[s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for x in frontier:
                for y, eid, need in adj[x]:
                    if dist[y] == INF and (state[eid] == 0 or state[eid] == need):
                        dist[y] = d
                        nxt.append(y)
            frontier = nxt
        return dist

    def strong(self) -> bool:
        return INF not in self._reach(self.out, 0) and INF not in self._reach(self.inn, 0)

    def radius(self, cutoff=INF):
        """Minimum eccentricity; vertices whose eccentricity reaches
        ``cutoff`` are abandoned early, so the result is exact only when
        below ``cutoff``."""
        best = INF
        for v in range(self.n):
            eo = max(self._reach(self.out, v))
            if eo >= min(best, cutoff):
                continue
            e = max(eo, max(self._reach(self.inn, v)))
            if e < best:
                best = e
        return best


def _would_be_strong(g, eid, head):
    # strong connectivity with edge ``eid`` traversable only into ``head``
    n = g.n

    def reach(adj):
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            x = stack.pop()
            for y, e in adj[x]:
                if seen[y]:
                    continue
                if e == eid and ((adj is g.out_adj and x == head) or (adj is g.in_adj and y == head)):
                    continue
                seen[y] = True
                count += 1
                stack.append(y)
        return count == n

    return reach(g.out_adj) and reach(g.in_adj)


def forced_orientations(g: MixedMultigraph) -> tuple[MixedMultigraph, dict[int, int]]:
    """Fix, until nothing changes, every undirected edge for which only one
    direction keeps the graph strongly orientable."""
    if g.n == 0 or not is_strongly_orientable(g):
        raise NotStronglyOrientable("graph is not strongly connected and bridgeless")
    forced: dict[int, int] = {}
    changed = True
    while changed:
        changed = False
        for eid in g.undirected_edge_ids():
            e = g.edges[eid]
            fwd = _would_be_strong(g, eid, e.head)
            bwd = _would_be_strong(g, eid, e.tail)
            if fwd and bwd:
                continue
            if not fwd and not bwd:
                raise NotStronglyOrientable(f"edge {eid} admits no direction")
            head = e.head if fwd else e.tail
            forced[eid] = head
            g = g.orient({eid: head})
            changed = True
    return g, forced


def oriented_radius_exact(g: MixedMultigraph, max_free: int = DEFAULT_MAX_FREE) -> OracleResult:
    """Minimum radius over all strong orientations of ``g``."""
    if g.n == 1:
        return OracleResult(0, Orientation(g, {}), 1, 0, 0, 1)
    g2, forced = forced_orientations(g)
    free = g2.undirected_edge_ids()
    if len(free) > max_free:
        raise TooManyFreeEdges(len(free), max_free)

    search = _Search(g2)
    state = search.state
    best = [INF, None]
    counters = [0, 0]  # nodes, leaves

    def visit(j):
        counters[0] += 1
        if not search.strong():
            return
        if j == len(free):
            counters[1] += 1
            rad = search.radius()
            if rad < best[0]:
                best[0] = rad
                best[1] = list(state)
            return
        if search.radius(cutoff=best[0]) >= best[0]:
            return
        eid = free[j]
        for choice in (1, 2):
            state[eid] = choice
            visit(j + 1)
        state[eid] = 0

    visit(0)
    if best[1] is None:
        raise NotStronglyOrientable("no strong orientation found")
    direction = dict(forced)
    for eid in free:
        e = g2.edges[eid]
        direction[eid] = e.head if best[1][eid] == 1 else e.tail
    return OracleResult(int(best[0]), Orientation(g, direction), counters[1], len(forced),
                        len(free), counters[0])


def oriented_radius_naive(g: MixedMultigraph) -> tuple[float, int]:
    """Plain enumeration over every direction assignment, no forcing and no
    pruning. Returns (minimum radius or INF, number of strong orientations).
    Exponential in the number of undirected edges."""
    und = g.undirected_edge_ids()
    best = INF
    strong = 0
    for i in range(1 << len(und)):
        gray = i ^ (i >> 1)
        direction = {}
        for bit, eid in enumerate(und):
            e = g.edges[eid]
            direction[eid] = e.head if (gray >> bit) & 1 else e.tail
        h = g.orient(direction)
        if not is_strongly_connected(h):
            continue
        strong += 1
        best = min(best, radius_center(h)[0])
    return best, strong
