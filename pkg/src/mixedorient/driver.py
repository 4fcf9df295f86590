"""Full strong orientation with a bounded radius.

The graph is processed in phases ``r, r-1, ..., 1``. Phase ``i`` orients a
subgraph around the current center (out- or in-biased according to the
phase plan) and contracts it into a single vertex, which becomes the next
center. Whatever is left unassigned at the end is oriented from the lower
to the higher vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import engine
from .cycles import eta as measure_eta
from .errors import NotStronglyOrientable, SourceMismatch
from .graph import (
    INF,
    MixedMultigraph,
    contract,
    diameter,
    is_strongly_connected,
    is_strongly_orientable,
    radius_center,
)
from .partition import PhasePlan, phase_plan, phase_plan_eta


@dataclass(frozen=True)
class Orientation:
    source: MixedMultigraph
    direction_of: dict[int, int]

    def is_total(self) -> bool:
        return all(e.id in self.direction_of for e in self.source.edges if not e.directed)

    def apply(self) -> MixedMultigraph:
        return self.source.orient(self.direction_of)


@dataclass(frozen=True)
class PhaseReport:
    phase_index: int
    mode: str
    center: int
    captured_count: int
    e_out_i: int  # INF if the phase left a vertex unreachable
    e_in_i: int
    bound_out_i: int
    bound_in_i: int
    diagnostics: tuple[str, ...] = ()
    # original ids
    captured_vertices: frozenset[int] = frozenset()
    assigned_edges: frozenset[int] = frozenset()

    def within_bounds(self) -> bool:
        return self.e_out_i <= self.bound_out_i and self.e_in_i <= self.bound_in_i


@dataclass(frozen=True)
class OrientationReport:
    radius_before: int
    center: int
    radius_after: int
    bound: float
    phases: tuple[PhaseReport, ...] = ()
    eta_used: int | None = None
    algorithm: str = "strong"
    plan_out: tuple[int, ...] = ()
    plan_in: tuple[int, ...] = ()
    # per-phase subgraph outputs, in phase-input ids; kept for inspection
    subgraphs: tuple = field(default=(), repr=False, compare=False)

    def sum_out(self) -> int:
        return sum(p.e_out_i for p in self.phases)

    def sum_in(self) -> int:
        return sum(p.e_in_i for p in self.phases)


def bound_theorem1(r: int) -> float:
    """1.5 r^2 + r + 1."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return 1.5 * r * r + r + 1


def bound_theorem2(r: int, eta: int) -> float:
    """1.5 r eta - 0.375 (eta-1)(eta-3) - 2r + 1, for 2 <= eta <= 2r+1."""
    if r < 1:
        raise ValueError("r must be positive")
    if not 2 <= eta <= 2 * r + 1:
        raise ValueError(f"eta must lie in [2, {2 * r + 1}], got {eta}")
    return 1.5 * r * eta - 0.375 * (eta - 1) * (eta - 3) - 2 * r + 1


def diameter_bound(d: int) -> int:
    """3d^2 + 2d + 2."""
    return 3 * d * d + 2 * d + 2


def _whole(x):
    # an unreachable vertex keeps INF so the report still shows the failure
    return x if x == INF else int(x)


def _run_phases(g, u, r, plan: PhasePlan, bounds):
    """Run phases r..1. ``bounds(i, mode)`` gives (bound_out, bound_in).

    Returns (assignments on original edge ids, phase reports, subgraphs).
    """
    cur = g
    origin = list(range(g.m))  # current edge id -> original edge id
    center = u
    assignments: dict[int, int] = {}
    # current vertex id -> one original vertex in its class (for reporting)
    reps = list(range(g.n))
    # current vertex id -> original vertices in its class
    members = [{v} for v in range(g.n)]
    reports = []
    subs = []
    for i in range(r, 0, -1):
        if cur.n == 1:
            break
        mode = plan.mode(i)
        orient = engine.orient_out if mode == "out" else engine.orient_in
        sub = orient(cur, center, i)
        e_out, e_in = engine.phase_eccentricities(cur, sub)
        b_out, b_in = bounds(i, mode)
        phase_edges = set()
        for eid, head in sub.assignments.items():
            orig = g.edges[origin[eid]]
            # map the head (a current vertex) back to the original endpoint
            assignments[origin[eid]] = orig.head if orig.head in members[head] else orig.tail
            phase_edges.add(origin[eid])
        reports.append(PhaseReport(
            phase_index=i,
            mode=mode,
            center=reps[center],
            captured_count=sum(len(members[x]) for x in sub.captured),
            e_out_i=_whole(e_out),
            e_in_i=_whole(e_in),
            bound_out_i=b_out,
            bound_in_i=b_in,
            diagnostics=sub.diagnostics,
            captured_vertices=frozenset().union(*(members[x] for x in sub.captured)),
            assigned_edges=frozenset(phase_edges),
        ))
        subs.append(sub)
        cm = contract(cur, sub.captured)
        new_members = [set() for _ in range(cm.quotient.n)]
        new_reps = [0] * cm.quotient.n
        for x in range(cur.n):
            new_members[cm.class_of_vertex[x]] |= members[x]
        for x in range(cm.quotient.n):
            new_reps[x] = min(new_members[x])
        new_reps[cm.super_vertex] = reps[center]
        origin = [origin[qe] for qe in cm.origin_of_edge]
        members, reps = new_members, new_reps
        cur = cm.quotient
        center = cm.super_vertex
    if cur.n != 1:
        raise AssertionError(f"{cur.n} vertices left after all phases")
    return assignments, reports, subs


def _finish(g, assignments):
    direction = dict(assignments)
    for e in g.edges:
        if not e.directed and e.id not in direction:
            direction[e.id] = max(e.tail, e.head)
    return Orientation(g, direction)


def _check_input(g):
    if g.has_loops():
        raise NotStronglyOrientable("self-loops are not supported")
    if g.n == 0 or not is_strongly_orientable(g):
        raise NotStronglyOrientable("graph is not strongly connected and bridgeless")


def strong_orientation(g: MixedMultigraph) -> tuple[Orientation, OrientationReport]:
    """Orient ``g`` into a strong digraph of radius at most 1.5 r^2 + r + 1."""
    _check_input(g)
    r, centers = radius_center(g)
    u = min(centers)
    if r == 0:
        o = Orientation(g, {})
        return o, OrientationReport(0, u, 0, bound_theorem1(0))
    plan = phase_plan(r)
    assignments, reports, subs = _run_phases(
        g, u, r, plan, lambda i, mode: (2 * i, 4 * i - 1) if mode == "out" else (4 * i - 1, 2 * i))
    o = _finish(g, assignments)
    after, _ = radius_center(o.apply())
    return o, OrientationReport(
        radius_before=r, center=u, radius_after=after, bound=bound_theorem1(r),
        phases=tuple(reports), algorithm="strong",
        plan_out=tuple(sorted(plan.out_phases)), plan_in=tuple(sorted(plan.in_phases)),
        subgraphs=tuple(subs),
    )


def strong_orientation_eta(g: MixedMultigraph) -> tuple[Orientation, OrientationReport]:
    """Orient ``g`` into a strong digraph of radius at most
    1.5 r eta - 0.375 (eta-1)(eta-3) - 2r + 1, where eta is the largest
    shortest-cycle length over all edges."""
    _check_input(g)
    r, centers = radius_center(g)
    u = min(centers)
    if r == 0:
        o = Orientation(g, {})
        return o, OrientationReport(0, u, 0, bound_theorem1(0), algorithm="eta")
    eta = measure_eta(g)
    # eta == 2 (every edge on a 2-cycle) plans as eta == 3; the weights only
    # steer the out/in choice
    plan = phase_plan_eta(r, max(eta, 3))

    def bounds(i, mode):
        k = min(eta, 2 * i + 1)
        return (k - 1, 2 * k - 3) if mode == "out" else (2 * k - 3, k - 1)

    assignments, reports, subs = _run_phases(g, u, r, plan, bounds)
    o = _finish(g, assignments)
    after, _ = radius_center(o.apply())
    return o, OrientationReport(
        radius_before=r, center=u, radius_after=after, bound=bound_theorem2(r, eta),
        phases=tuple(reports), eta_used=eta, algorithm="eta",
        plan_out=tuple(sorted(plan.out_phases)), plan_in=tuple(sorted(plan.in_phases)),
        subgraphs=tuple(subs),
    )


@dataclass(frozen=True)
class VerificationReport:
    total: bool
    strong: bool
    radius: int | None
    diameter: int | None
    source_radius: int
    source_diameter: int
    radius_bound: float
    diameter_bound: int
    radius_ok: bool
    diameter_ok: bool

    @property
    def valid(self) -> bool:
        return self.total and self.strong and self.radius_ok and self.diameter_ok


def verify_orientation(g: MixedMultigraph, o: Orientation) -> VerificationReport:
    """Check an orientation of ``g``: totality, strong connectivity, and the
    radius / diameter bounds relative to ``g``'s own radius and diameter."""
    if o.source != g:
        raise SourceMismatch("orientation was built for a different graph")
    r, _ = radius_center(g)
    d = diameter(g)
    total = o.is_total()
    h = o.apply()
    strong = total and is_strongly_connected(h)
    rad = radius_center(h)[0] if strong else None
    dia = diameter(h) if strong else None
    rb = bound_theorem1(r)
    db = diameter_bound(d)
    return VerificationReport(
        total=total, strong=strong, radius=rad, diameter=dia,
        source_radius=r, source_diameter=d, radius_bound=rb, diameter_bound=db,
        radius_ok=strong and rad <= rb, diameter_ok=strong and dia <= db,
    )
