"""Command-line front end.

Exit codes: 0 success, 1 domain error (for example a graph that is not
strongly orientable, or an orientation that fails verification), 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import hashlib
import logging
import sys

from . import __version__
from .cycles import eta
from .driver import Orientation, strong_orientation, strong_orientation_eta, verify_orientation
from .errors import GraphSyntaxError, OrientationError, SourceMismatch
from .families import gen_lower_bound, gen_random_strongly_orientable
from .fileformat import emit, parse_graph
from .graph import (
    bridges,
    diameter,
    is_strongly_connected,
    is_strongly_orientable,
    radius_center,
)
from .oracle import DEFAULT_MAX_FREE, oriented_radius_exact

TOOL = "mixedorient"


class UsageError(Exception):
    pass


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, float) and value.is_integer():
        return str(int(value))
    if isinstance(value, (list, tuple, set, frozenset)):
        return ",".join(_fmt(v) for v in sorted(value)) if value else "-"
    return str(value)


def render_report(fields: list[tuple[str, object]]) -> str:
    """``key = value`` lines in the given order."""
    return "".join(f"{k} = {_fmt(v)}\n" for k, v in fields)


def parse_report(text: str) -> dict[str, str]:
    out = {}
    for line in text.splitlines():
        if " = " in line:
            k, v = line.split(" = ", 1)
            out[k] = v
    return out


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _header(command: str, text: str) -> list[tuple[str, object]]:
    return [
        ("tool", TOOL),
        ("version", __version__),
        ("command", command),
        ("input_sha256", hashlib.sha256(text.encode("utf-8")).hexdigest()),
    ]


def _load(path):
    text = _read_text(path)
    return text, parse_graph(text)


# -- subcommands --------------------------------------------------------------

def cmd_check(args) -> int:
    text, g = _load(args.file)
    fields = _header("check", text)
    fields += [
        ("n", g.n),
        ("m", g.m),
        ("undirected_edges", len(g.undirected_edge_ids())),
        ("strongly_connected", is_strongly_connected(g)),
        ("bridges", sorted(bridges(g))),
    ]
    orientable = is_strongly_orientable(g)
    fields.append(("strongly_orientable", orientable))
    if orientable:
        r, centers = radius_center(g)
        fields += [("radius", r), ("centers", sorted(centers)), ("diameter", diameter(g))]
        if g.m:
            fields.append(("eta", eta(g)))
    sys.stdout.write(render_report(fields))
    return 0


def orientation_report_fields(g, o, rep, text) -> list[tuple[str, object]]:
    ver = verify_orientation(g, o)
    fields = _header("orient", text)
    fields += [
        ("algorithm", rep.algorithm),
        ("n", g.n),
        ("m", g.m),
        ("radius_before", rep.radius_before),
        ("center", rep.center),
        ("eta", rep.eta_used),
        ("bound", rep.bound),
        ("radius_after", rep.radius_after),
        ("within_bound", rep.radius_after <= rep.bound),
        ("strong", ver.strong),
        ("diameter_before", ver.source_diameter),
        ("diameter_after", ver.diameter),
        ("diameter_bound", ver.diameter_bound),
        ("plan_out", rep.plan_out),
        ("plan_in", rep.plan_in),
        ("phases", len(rep.phases)),
        ("sum_e_out", rep.sum_out()),
        ("sum_e_in", rep.sum_in()),
    ]
    for p in rep.phases:
        key = f"phase.{p.phase_index}"
        fields += [
            (f"{key}.mode", p.mode),
            (f"{key}.center", p.center),
            (f"{key}.captured", p.captured_count),
            (f"{key}.e_out", p.e_out_i),
            (f"{key}.e_in", p.e_in_i),
            (f"{key}.bound_out", p.bound_out_i),
            (f"{key}.bound_in", p.bound_in_i),
            (f"{key}.diagnostics", len(p.diagnostics)),
        ]
    return fields


def cmd_orient(args) -> int:
    text, g = _load(args.file)
    algo = strong_orientation if args.algorithm == "strong" else strong_orientation_eta
    o, rep = algo(g)
    h = o.apply()
    report = render_report(orientation_report_fields(g, o, rep, text))
    if args.out is not None:
        _write_text(args.out, emit(h))
    if args.report is not None:
        _write_text(args.report, report)
    elif args.out == "-":
        sys.stderr.write(report)
    else:
        sys.stdout.write(report)
    if args.figure is not None:
        from .plotting import save_phase_figure

        save_phase_figure(rep, args.figure)
    return 0


def cmd_gen(args) -> int:
    if args.family == "lower-bound":
        if args.r is None:
            raise UsageError("--r is required for the lower-bound family")
        if args.r < 1:
            raise UsageError("--r must be positive")
        fam = gen_lower_bound(args.r)
        text = emit(fam.graph, (f"lower-bound family r={args.r}, root {fam.root}",))
    else:
        if args.n is None:
            raise UsageError("--n is required for the random family")
        if args.n < 1:
            raise UsageError("--n must be positive")
        if not 0.0 <= args.frac <= 1.0:
            raise UsageError("--frac must lie in [0, 1]")
        g = gen_random_strongly_orientable(args.n, args.frac, args.seed)
        text = emit(g, (f"random n={args.n} frac={args.frac} seed={args.seed}",))
    _write_text(args.out, text)
    return 0


def cmd_oracle(args) -> int:
    text, g = _load(args.file)
    res = oriented_radius_exact(g, max_free=args.max_free)
    fields = _header("oracle", text) + [
        ("n", g.n),
        ("m", g.m),
        ("oriented_radius", res.oriented_radius),
        ("forced_count", res.forced_count),
        ("free_count", res.free_count),
        ("explored", res.explored),
        ("nodes", res.nodes),
    ]
    if args.out is not None:
        _write_text(args.out, emit(res.witness.apply()))
    sys.stdout.write(render_report(fields))
    return 0


def orientation_from_digraph(g, h) -> Orientation:
    """Read back an orientation of ``g`` from a fully directed graph with the
    same edge sequence."""
    if h.n != g.n or h.m != g.m:
        raise SourceMismatch(f"orientation has n={h.n}, m={h.m}; graph has n={g.n}, m={g.m}")
    direction = {}
    for e, f in zip(g.edges, h.edges):
        if not f.directed:
            raise SourceMismatch(f"edge {e.id} is not oriented")
        if e.directed:
            if (f.tail, f.head) != (e.tail, e.head):
                raise SourceMismatch(f"arc {e.id} changed direction or endpoints")
        elif {f.tail, f.head} != {e.tail, e.head}:
            raise SourceMismatch(f"edge {e.id} has different endpoints")
        else:
            direction[e.id] = f.head
    return Orientation(g, direction)


def cmd_verify(args) -> int:
    text, g = _load(args.graph)
    _, h = _load(args.orientation)
    o = orientation_from_digraph(g, h)
    ver = verify_orientation(g, o)
    fields = _header("verify", text) + [
        ("total", ver.total),
        ("strong", ver.strong),
        ("radius", ver.radius),
        ("diameter", ver.diameter),
        ("source_radius", ver.source_radius),
        ("source_diameter", ver.source_diameter),
        ("radius_bound", ver.radius_bound),
        ("diameter_bound", ver.diameter_bound),
        ("radius_ok", ver.radius_ok),
        ("diameter_ok", ver.diameter_ok),
        ("valid", ver.valid),
    ]
    sys.stdout.write(render_report(fields))
    if not ver.valid:
        print(f"{TOOL}: orientation is not valid", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=TOOL, description="Strong orientations of mixed multigraphs with bounded radius.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log phase diagnostics")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report basic properties of a graph")
    p.add_argument("file", nargs="?", default="-")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orient", help="orient a graph and report the result")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--algorithm", choices=("strong", "eta"), default="strong")
    p.add_argument("--out", help="write the oriented graph here ('-' for stdout)")
    p.add_argument("--report", help="write the report here instead of stdout")
    p.add_argument("--figure", help="save a per-phase eccentricity chart (png, pdf, svg)")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--family", choices=("lower-bound", "random"), required=True)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--frac", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="exact oriented radius of a small graph")
    p.add_argument("file", nargs="?", default="-")
    p.add_argument("--max-free", type=int, default=DEFAULT_MAX_FREE)
    p.add_argument("--out", help="write an optimal orientation here")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check an orientation against its graph")
    p.add_argument("graph")
    p.add_argument("orientation")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.WARNING if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphSyntaxError) as exc:
        print(f"{TOOL}: {exc}", file=sys.stderr)
        return 2
    except OrientationError as exc:
        print(f"{TOOL}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
