"""One phase of the radius-bounded strong orientation.

``orient_out(g, u, r)`` orients a subgraph around ``u`` so that every
captured vertex is within ``2r`` of ``u`` and reaches ``u`` within ``4r-1``;
``orient_in`` is its mirror image. The work happens in four stages:

0. parallel edges at ``u`` are turned into directed 2-cycles where possible;
1. the remaining undirected edges at ``u`` are oriented one by one, but only
   when doing so keeps every shortest-cycle length at ``u`` unchanged;
2. a pruned BFS out-tree from ``u`` reaching every in-neighbour of ``u``;
3. a pruned reverse BFS in-tree into the contracted out-tree, reaching the
   out-neighbours of ``u`` the out-tree missed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .cycles import cycle_length
from .errors import NotNormalized, PreconditionViolated
from .graph import (
    INF,
    MixedMultigraph,
    bfs_tree,
    contract,
    distance,
    distances_from,
    distances_to,
    eccentricity,
    is_strongly_orientable,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NeighborClassification:
    """Neighbours of ``center`` after Stage 1.

    ``x_un`` holds neighbours whose single undirected edge is still
    unprocessed, so it is empty once Stage 1 has run. ``processed`` lists the
    Stage 1 visiting order.
    """

    center: int
    x_in: frozenset[int]
    x_out: frozenset[int]
    x_un: frozenset[int]
    x_conf: frozenset[int]
    l_of: dict[int, int]
    s: int
    processed: tuple[int, ...] = ()

    @property
    def x(self) -> frozenset[int]:
        return self.x_in | self.x_out | self.x_un | self.x_conf


@dataclass(frozen=True)
class OrientedSubgraph:
    """Output of one phase, in the vertex/edge ids of the phase input graph.

    ``assignments`` maps undirected edge ids to the head vertex chosen for
    them. ``bound_out``/``bound_in`` are the guaranteed distance bounds from /
    to ``center`` inside the phase subgraph.
    """

    center: int
    mode: str
    captured: frozenset[int]
    assignments: dict[int, int]
    tree_out_edges: frozenset[int]
    tree_in_edges: frozenset[int]
    committed: frozenset[int]
    bound_out: int
    bound_in: int
    classification: NeighborClassification | None = None
    diagnostics: tuple[str, ...] = field(default=())
    out_tree_vertices: frozenset[int] = frozenset()

    @property
    def guarantee(self) -> tuple[int, int]:
        return (self.bound_out, self.bound_in)

    def edge_ids(self, g: MixedMultigraph) -> set[int]:
        """Edges of the oriented phase subgraph: tree edges, Stage 0/1
        commitments and pre-existing arcs among captured vertices."""
        ids = set(self.tree_out_edges) | set(self.tree_in_edges) | set(self.committed)
        cap = self.captured
        ids.update(e.id for e in g.edges if e.directed and e.tail in cap and e.head in cap)
        return ids


def phase_digraph(g: MixedMultigraph, sub: OrientedSubgraph) -> MixedMultigraph:
    """The oriented phase subgraph on the full vertex set of ``g``; edges not
    in the subgraph are dropped."""
    keep = sub.edge_ids(g)
    triples = []
    for e in g.edges:
        if e.id not in keep:
            continue
        if e.directed:
            triples.append((e.tail, e.head, True))
        else:
            head = sub.assignments[e.id]
            triples.append((e.other(head), head, True))
    return MixedMultigraph(g.n, triples)


def phase_eccentricities(g: MixedMultigraph, sub: OrientedSubgraph) -> tuple[float, float]:
    """(out, in) eccentricity of the center over the captured vertices,
    measured inside the oriented phase subgraph."""
    h = phase_digraph(g, sub)
    dout = distances_from(h, sub.center)
    din = distances_to(h, sub.center)
    return (max(dout[v] for v in sub.captured), max(din[v] for v in sub.captured))


# -- Stage 0 -----------------------------------------------------------------

def normalize_multiedges(g: MixedMultigraph, u: int) -> tuple[MixedMultigraph, dict[int, int]]:
    """Orient undirected members of parallel bundles at ``u`` so that each
    bundle contains both ``u->v`` and ``v->u``; extra undirected members
    point at ``u``."""
    commitments: dict[int, int] = {}
    for v in sorted(g.neighbors(u)):
        bundle = g.edges_between(u, v)
        if len(bundle) < 2:
            continue
        has_out = any(e.directed and e.tail == u for e in bundle)
        has_in = any(e.directed and e.head == u for e in bundle)
        for e in sorted((e for e in bundle if not e.directed), key=lambda e: e.id):
            if not has_out:
                commitments[e.id] = v
                has_out = True
            else:
                commitments[e.id] = u
                has_in = True
    if not commitments:
        return g, commitments
    return g.orient(commitments), commitments


# -- Stage 1 -----------------------------------------------------------------

def _l_values(g, u, xs):
    out = {}
    for v in xs:
        best = min(cycle_length(g, e.id) for e in g.edges_between(u, v))
        out[v] = best
    return out


def _cycle_within(g, eid, bound):
    e = g.edges[eid]
    lim = bound - 1
    if e.directed:
        return distance(g, e.head, e.tail, skip=eid, limit=lim) <= lim
    return (distance(g, e.head, e.tail, skip=eid, limit=lim) <= lim
            or distance(g, e.tail, e.head, skip=eid, limit=lim) <= lim)


def _l_preserved(g, u, l_of):
    # orienting an edge never shortens a cycle, so "s unchanged" is the same
    # as every l(v) still being attainable
    for v, lv in l_of.items():
        if not any(_cycle_within(g, e.id, lv) for e in g.edges_between(u, v)):
            return False
    return True


def _split_neighbors(g, u):
    x_in, x_out, x_un = set(), set(), set()
    for v in g.neighbors(u):
        bundle = g.edges_between(u, v)
        if any(e.directed and e.head == u for e in bundle):
            x_in.add(v)
        elif any(e.directed and e.tail == u for e in bundle):
            x_out.add(v)
        else:
            if len(bundle) != 1:
                raise NotNormalized(f"parallel undirected edges between {u} and {v}")
            x_un.add(v)
    return x_in, x_out, x_un


def stage1(g: MixedMultigraph, u: int) -> tuple[MixedMultigraph, NeighborClassification]:
    """Orient the single undirected edges at ``u`` that can be oriented
    without lengthening any shortest cycle through an edge at ``u``."""
    x_in, x_out, x_un = _split_neighbors(g, u)
    for v in x_in | x_out:
        if any(not e.directed for e in g.edges_between(u, v)):
            raise NotNormalized(f"undirected edge parallel to an arc between {u} and {v}")
    xs = x_in | x_out | x_un
    l_of = _l_values(g, u, xs)
    s = sum(l_of.values())

    x_conf = set()
    order = tuple(sorted(x_un))
    for v in order:
        (e,) = g.edges_between(u, v)
        for head, bucket in ((u, x_in), (v, x_out)):
            trial = g.orient({e.id: head})
            if s != INF and _l_preserved(trial, u, l_of):
                g = trial
                bucket.add(v)
                break
        else:
            x_conf.add(v)

    cls = NeighborClassification(
        center=u,
        x_in=frozenset(x_in),
        x_out=frozenset(x_out),
        x_un=frozenset(),
        x_conf=frozenset(x_conf),
        l_of={v: int(l) for v, l in l_of.items()},
        s=int(s),
        processed=order,
    )
    return g, cls


def commitments_between(before: MixedMultigraph, after: MixedMultigraph) -> dict[int, int]:
    """Edges undirected in ``before`` but directed in ``after``, with their heads."""
    return {e.id: after.edges[e.id].head for e in before.edges
            if not e.directed and after.edges[e.id].directed}


# -- Stages 2 and 3 ----------------------------------------------------------

def _prune(parent, edges, root, targets):
    """Union of tree paths from ``root`` to each target: (vertices, edge ids)."""
    verts = {root}
    eids = set()
    for t in sorted(targets):
        x = t
        while x not in verts:
            verts.add(x)
            eid = parent[x]
            eids.add(eid)
            x = edges[eid].other(x)
    return verts, eids


def _place_stragglers(g, u, missing, l_keys):
    """Orient the edge ``uv`` of each conflicted ``v`` the out-tree missed.

    Both directions lengthen some shortest cycle at ``u``; take the one with
    the smaller longest cycle, then the smaller ``s``, then the shorter way
    round the cycle through ``uv``. With ``u->v`` the vertex joins the in-tree, with
    ``v->u`` the out-tree. Returns (graph, commitments, out-tree vertices).
    """
    commitments: dict[int, int] = {}
    via_out: set[int] = set()
    for v in sorted(missing):
        (e,) = g.edges_between(u, v)
        back = distance(g, v, u, skip=e.id)
        fwd = distance(g, u, v, skip=e.id)
        options = []
        for head, own in ((v, back), (u, fwd)):
            trial = g.orient({e.id: head})
            ls = _l_values(trial, u, l_keys).values()
            options.append((max(ls), sum(ls), own, head == u, head, trial))
        *_, head, g = min(options, key=lambda o: o[:4])
        if head == u:
            via_out.add(v)
        commitments[e.id] = head
    return g, commitments, via_out


def orient_out(g: MixedMultigraph, u: int, r: int) -> OrientedSubgraph:
    """Orient a subgraph H around ``u`` with ``N[u]`` inside H such that
    ``d_H(u, v) <= 2r`` and ``d_H(v, u) <= 4r - 1`` for every vertex of H.

    ``u`` must have eccentricity at most ``r`` in ``g``.
    """
    if g.has_loops():
        raise PreconditionViolated("self-loops are not allowed")
    if not is_strongly_orientable(g):
        raise PreconditionViolated("graph is not strongly orientable")
    if eccentricity(g, u) > r:
        raise PreconditionViolated(f"vertex {u} has eccentricity above {r}")
    if g.n == 1:
        return OrientedSubgraph(u, "out", frozenset({u}), {}, frozenset(), frozenset(),
                                frozenset(), 0, 0, out_tree_vertices=frozenset({u}))

    g0, commit0 = normalize_multiedges(g, u)
    g1, cls = stage1(g0, u)
    commit1 = commitments_between(g0, g1)
    diagnostics = []

    # Stage 2: BFS out-tree from u covering X_in
    dist, parent = bfs_tree(g1.out_adj, g1.n, u)
    s1, t_out = _prune(parent, g1.edges, u, cls.x_in)
    missing = cls.x_conf - s1
    late_commit: dict[int, int] = {}
    via_in: set[int] = set()
    if missing:
        msg = f"conflicted vertices {sorted(missing)} not reached by the out-tree of {u}"
        log.warning(msg)
        diagnostics.append(msg)
        g1, late_commit, via_out = _place_stragglers(g1, u, missing, cls.l_of)
        via_in = missing - via_out
        dist, parent = bfs_tree(g1.out_adj, g1.n, u)
        s1, t_out = _prune(parent, g1.edges, u, cls.x_in | via_out)
    tree_assign = {}
    for eid in t_out:
        e = g1.edges[eid]
        if not e.directed:
            # the child end is the one further from u
            tree_assign[eid] = e.tail if dist[e.tail] > dist[e.head] else e.head
    g2 = g1.orient(tree_assign)

    # Stage 3: reverse BFS in-tree into the contracted out-tree
    targets = (cls.x_out | via_in) - s1
    s2: set[int] = set()
    t_in: set[int] = set()
    if targets:
        cm = contract(g2, s1)
        q = cm.quotient
        member = {cm.class_of_vertex[v]: v for v in range(g.n) if v not in s1}
        _, qparent = bfs_tree(q.in_adj, q.n, cm.super_vertex)
        qverts, qeids = _prune(qparent, q.edges, cm.super_vertex,
                               {cm.class_of_vertex[v] for v in targets})
        s2 = {member[x] for x in qverts if x != cm.super_vertex}
        for qe in qeids:
            eid = cm.origin_of_edge[qe]
            t_in.add(eid)
            e = g2.edges[eid]
            if not e.directed:
                # qparent points from a vertex towards the super vertex:
                # the tail is the endpoint whose parent edge this is
                a, b = e.tail, e.head
                qa = cm.class_of_vertex[a]
                tail = a if qa != cm.super_vertex and qparent[qa] == qe else b
                tree_assign[eid] = e.other(tail)

    captured = frozenset(s1 | s2)
    closed_nbhd = g.neighbors(u) | {u}
    if not closed_nbhd <= captured:
        msg = f"closed neighbourhood of {u} not captured: {sorted(closed_nbhd - captured)}"
        log.warning(msg)
        diagnostics.append(msg)

    assignments = {**commit0, **commit1, **late_commit, **tree_assign}
    return OrientedSubgraph(
        center=u,
        mode="out",
        captured=captured,
        assignments=assignments,
        tree_out_edges=frozenset(t_out),
        tree_in_edges=frozenset(t_in),
        committed=frozenset(commit0) | frozenset(commit1) | frozenset(late_commit),
        bound_out=2 * r,
        bound_in=4 * r - 1,
        classification=cls,
        diagnostics=tuple(diagnostics),
        out_tree_vertices=frozenset(s1),
    )


def orient_in(g: MixedMultigraph, u: int, r: int) -> OrientedSubgraph:
    """Mirror of :func:`orient_out`: ``d_H(u, v) <= 4r - 1`` and
    ``d_H(v, u) <= 2r``. Runs ``orient_out`` on the arc-reversed graph."""
    sub = orient_out(g.reverse(), u, r)
    flipped = {eid: g.edges[eid].other(head) for eid, head in sub.assignments.items()}
    return OrientedSubgraph(
        center=u,
        mode="in",
        captured=sub.captured,
        assignments=flipped,
        tree_out_edges=sub.tree_out_edges,
        tree_in_edges=sub.tree_in_edges,
        committed=sub.committed,
        bound_out=sub.bound_in,
        bound_in=sub.bound_out,
        classification=sub.classification,
        diagnostics=sub.diagnostics,
        out_tree_vertices=sub.out_tree_vertices,
    )


def check_conflict_soundness(g: MixedMultigraph, u: int, cls: NeighborClassification) -> bool:
    """For every conflicted ``v`` there is ``w`` in X_in such that every
    shortest u->w path starts with the edge uv. ``g`` is the Stage 1 output.
    Brute force; meant for small test instances."""
    du = distances_from(g, u)
    for v in cls.x_conf:
        (e,) = [e for e in g.edges_between(u, v) if not e.directed]
        ok = False
        for w in cls.x_in:
            if du[w] == INF:
                continue
            # no shortest path avoids uv  <=>  distance rises when uv is removed
            if distance(g, u, w, skip=e.id) > du[w]:
                ok = True
                break
        if not ok:
            return False
    return True
