"""Instance generators: the extremal lower-bound family and random
strongly orientable mixed multigraphs."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .driver import Orientation
from .graph import (
    INF,
    MixedMultigraph,
    bridges,
    distances_from,
    distances_to,
    is_strongly_connected,
    underlying_components,
)


@dataclass(frozen=True)
class Fork:
    """An internal tree vertex ``parent`` with its three children.

    ``left_path`` runs from ``left`` to ``middle`` and ``right_path`` from
    ``middle`` to ``right``; both are edge-id sequences in walking order.
    ``side`` is the parent's own role ("root", "left" or "right").
    """

    copy: int
    level: int
    parent: int
    side: str
    left: int
    middle: int
    right: int
    edge_left: int
    edge_middle: int
    edge_right: int
    left_path: tuple[int, ...]
    right_path: tuple[int, ...]
    left_path_vertices: tuple[int, ...]
    right_path_vertices: tuple[int, ...]


@dataclass(frozen=True)
class LowerBoundFamily:
    r: int
    graph: MixedMultigraph
    root: int
    forks: tuple[Fork, ...]
    role: dict[int, str]
    level: dict[int, int]
    copy: dict[int, int]

    def leaf_extremes(self, copy: int) -> tuple[int, int]:
        """(f, g): the level-r leaves reached by always going left / right."""
        by_parent = {(fk.copy, fk.parent): fk for fk in self.forks}
        f = g = self.root
        for _ in range(self.r):
            f = by_parent[(copy, f)].left
            g = by_parent[(copy, g)].right
        return f, g


def gen_lower_bound(r: int) -> LowerBoundFamily:
    """Two copies of the ternary-tree gadget glued at the root ``a = 0``.

    In each copy every internal vertex at level ``i`` has left, middle and
    right children; sibling pairs (left, middle) and (middle, right) are
    joined by paths of length ``2r - 2i - 1`` whose middle edge is an arc
    pointing rightwards. Middle children are leaves, and so is everything
    at level ``r``. All other edges are undirected.
    """
    if r < 1:
        raise ValueError("r must be positive")
    triples: list[tuple[int, int, bool]] = []
    role = {0: "root"}
    level = {0: 0}
    copy_of = {0: 0}
    forks = []
    count = 1

    def vertex(kind, lvl, cp):
        nonlocal count
        v = count
        count += 1
        role[v] = kind
        level[v] = lvl
        copy_of[v] = cp
        return v

    def edge(a, b, directed=False):
        triples.append((a, b, directed))
        return len(triples) - 1

    def path(a, b, length, lvl, cp):
        # middle edge (position (length+1)/2, 1-based) is the arc
        mid = (length + 1) // 2
        verts = [a] + [vertex("path", lvl, cp) for _ in range(length - 1)] + [b]
        eids = tuple(edge(verts[j], verts[j + 1], j + 1 == mid) for j in range(length))
        return eids, tuple(verts)

    for cp in (1, 2):
        frontier = [(0, "root")]
        for i in range(r):
            nxt = []
            for p, side in frontier:
                left = vertex("left", i + 1, cp)
                middle = vertex("middle", i + 1, cp)
                right = vertex("right", i + 1, cp)
                el, em, er = edge(p, left), edge(p, middle), edge(p, right)
                length = 2 * r - 2 * i - 1
                lp, lpv = path(left, middle, length, i + 1, cp)
                rp, rpv = path(middle, right, length, i + 1, cp)
                forks.append(Fork(cp, i, p, side, left, middle, right, el, em, er, lp, rp, lpv, rpv))
                if i + 1 < r:
                    nxt += [(left, "left"), (right, "right")]
            frontier = nxt
    g = MixedMultigraph(count, triples)
    return LowerBoundFamily(r, g, 0, tuple(forks), role, level, copy_of)


def optimal_lower_bound_orientation(fam: LowerBoundFamily) -> Orientation:
    """The orientation of radius r^2 + 3r - 1.

    Path edges follow their arc, parents point to left children, right
    children point to parents. The root points to both middle children. Any
    other vertex points to its middle child exactly when it also points to
    its own parent (right children); left children receive the arc from
    their middle child instead.
    """
    g = fam.graph
    direction: dict[int, int] = {}
    for fk in fam.forks:
        for eids, verts in ((fk.left_path, fk.left_path_vertices),
                            (fk.right_path, fk.right_path_vertices)):
            for j, eid in enumerate(eids):
                direction[eid] = verts[j + 1]
        direction[fk.edge_left] = fk.left
        direction[fk.edge_right] = fk.parent
        if fk.side in ("root", "right"):
            direction[fk.edge_middle] = fk.middle
        else:
            direction[fk.edge_middle] = fk.parent
    return Orientation(g, {eid: h for eid, h in direction.items() if not g.edges[eid].directed})


def gen_random_strongly_orientable(n: int, undirected_fraction: float = 0.5, seed: int = 0,
                                   extra: int | None = None) -> MixedMultigraph:
    """Random strongly orientable mixed multigraph on ``n`` vertices.

    A random Hamiltonian cycle (each edge an arc along the cycle or
    undirected) plus ``extra`` random edges (default: random in ``0..n``),
    repaired with undirected edges until strongly connected and bridgeless.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not 0.0 <= undirected_fraction <= 1.0:
        raise ValueError("undirected_fraction must lie in [0, 1]")
    rng = random.Random(seed)
    if n == 1:
        return MixedMultigraph(1, [])
    perm = list(range(n))
    rng.shuffle(perm)
    triples = []
    for i in range(n):
        triples.append((perm[i], perm[(i + 1) % n], rng.random() >= undirected_fraction))
    if extra is None:
        extra = rng.randint(0, n)
    for _ in range(extra):
        a, b = rng.sample(range(n), 2)
        triples.append((a, b, rng.random() >= undirected_fraction))
    g = MixedMultigraph(n, triples)
    return _repair(g, rng)


def _repair(g, rng):
    triples = g.triples()
    while True:
        if not is_strongly_connected(g):
            dout = distances_from(g, 0)
            din = distances_to(g, 0)
            w = min(v for v in range(g.n) if dout[v] == INF or din[v] == INF)
            triples.append((0, w, False))
        else:
            br = bridges(g)
            if not br:
                return g
            eid = min(br)
            side = underlying_components(g, skip=eid)
            e = g.edges[eid]
            a_side = [v for v in range(g.n) if side[v] == side[e.tail]]
            b_side = [v for v in range(g.n) if side[v] == side[e.head]]
            triples.append((rng.choice(a_side), rng.choice(b_side), False))
        g = MixedMultigraph(g.n, triples)
