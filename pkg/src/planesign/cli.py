"""Command line interface.

Exit codes: 0 on success, 1 on a domain error (the violated contract is
printed by name), 2 on usage or parse errors.  All output is line-oriented
and canonically sorted; identical inputs produce byte-identical output.
The environment variable PSG_ORACLE_LIMIT overrides the enumeration cap.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .certify import certify_hexagon, certify_ladder
from .dot import face_graph_dot, graph_dot
from .dual import is_outerplane, verify_outer_product, weak_dual
from .embedding import POSITIVE, circle_from_vertices, sign_char
from .errors import (
    InconsistentRotation,
    ParseError,
    PlaneSignError,
    UnknownVertex,
)
from .fileio import (
    _canonical_cycle,
    load_graph,
    parse_diagonals,
    parse_hex_config,
    parse_ladder_config,
    parse_sequence,
    parse_signing,
    serialize_graph,
)
from .grids import GridSpec, build_grid, build_triangulated_grid
from .peeling import (
    apply_coham_detailed,
    canonical_coham_boxes,
    coham_from_circle,
    hamiltonian_set_sign,
    peel_step,
    realize_face_sequence,
)
from .search import DEFAULT_LIMIT, enumerate_hamiltonian, sign_census

_PARSE_ERRORS = (ParseError, UnknownVertex, InconsistentRotation)


def _read(path):
    return Path(path).read_text(encoding="utf-8")


def _graph(args):
    return load_graph(_read(args.file))


def _limit(args):
    if getattr(args, "limit", None) is not None:
        return args.limit
    env = os.environ.get("PSG_ORACLE_LIMIT")
    if env:
        return int(env)
    return DEFAULT_LIMIT


def _parse_circle_arg(graph, text):
    verts = [int(t) for t in text.replace(",", " ").split()]
    return circle_from_vertices(graph, verts)


def _print_graph(out, graph, dest):
    text = serialize_graph(graph)
    if dest:
        Path(dest).write_text(text, encoding="utf-8")
    else:
        out.write(text)


# -- subcommands ---------------------------------------------------------------

def cmd_faces(args, out):
    g = _graph(args)
    out.write(f"faces {g.face_count} outer {g.outer_face}\n")
    for f in g.face_ids():
        walk = _canonical_cycle(g.face_vertices(f))
        out.write(f"face {f} : " + " ".join(map(str, walk)) + "\n")
    return 0


def cmd_dual(args, out):
    g = _graph(args)
    dual = weak_dual(g)
    if args.dot:
        out.write(face_graph_dot(dual))
        return 0
    out.write(f"dual {len(dual)} edges {len(dual.edges())}\n")
    for f in dual.nodes:
        phi, deg = dual.label(f)
        out.write(f"node {f} phi {phi} deg {deg}\n")
    for a, b in dual.edges():
        out.write(f"edge {a} {b}\n")
    return 0


def cmd_check(args, out):
    g = _graph(args)
    out.write("euler ok\n")
    two = g.vertex_count >= 3 and g.is_two_connected()
    out.write(f"two-connected {'yes' if two else 'no'}\n")
    out.write(f"outerplane {'yes' if is_outerplane(g) else 'no'}\n")
    if not two:
        out.write("outer-product skipped\n")
        return 0
    ok = verify_outer_product(g)
    out.write(f"outer-product {'ok' if ok else 'FAIL'}\n")
    return 0 if ok else 1


def cmd_ham(args, out):
    g = _graph(args)
    enum = enumerate_hamiltonian(g, _limit(args))
    out.write(f"circles {len(enum.circles)}\n")
    for order in sorted(c.order for c in enum.circles):
        out.write("circle : " + " ".join(map(str, order)) + "\n")
    if enum.truncated:
        out.write("truncated\n")
    return 0


def cmd_census(args, out):
    g = _graph(args)
    census = sign_census(g, _limit(args))
    out.write(f"positive={census.positives} negative={census.negatives}\n")
    if census.witness_positive is not None:
        out.write("witness + : " + " ".join(map(str, census.witness_positive.order)) + "\n")
    if census.witness_negative is not None:
        out.write("witness - : " + " ".join(map(str, census.witness_negative.order)) + "\n")
    if census.truncated:
        out.write("truncated\n")
    return 0


def cmd_peel(args, out):
    g = _graph(args)
    circle = _parse_circle_arg(g, args.circle)
    e = peel_step(g, circle)
    u, v = g.endpoints(e)
    out.write(f"peel {u} {v}\n")
    return 0


def cmd_coham(args, out):
    g = _graph(args)
    if args.from_circle:
        circle = _parse_circle_arg(g, args.from_circle)
        seq = coham_from_circle(g, circle)
        out.write("# faces : " + " ".join(map(str, seq.faces)) + "\n")
        out.write("# ham-set : " + " ".join(map(str, sorted(seq.final_bounded))) + "\n")
        for e in seq.edges:
            u, v = g.endpoints(e)
            out.write(f"{u} {v}\n")
        return 0
    steps = parse_sequence(_read(args.apply))
    kinds = {kind for kind, _, _ in steps}
    if "box" in kinds:
        if kinds != {"box"}:
            raise ParseError(0, "box and edge steps cannot be mixed")
        if not args.grid:
            raise ParseError(0, "box sequences need --grid M N")
        m, n = args.grid
        grid = build_grid(GridSpec(m, n))
        if serialize_graph(grid.graph) != serialize_graph(g.with_signs({})):
            raise ParseError(0, f"graph file is not an {m}x{n} grid")
        # face ids agree between the plain grid and the signed file graph,
        # so the box map carries over
        seq = realize_face_sequence(g, [grid.box_face((i, j)) for _, i, j in steps])
        ham = apply_coham_detailed(g, seq.edges)[1]
    else:
        edges = [g.edge_id(u, v) for _, u, v in steps]
        seq, ham = apply_coham_detailed(g, edges)
    out.write("faces : " + " ".join(map(str, seq.faces)) + "\n")
    out.write("ham-set : " + " ".join(map(str, sorted(ham.faces))) + "\n")
    out.write(f"sign : {sign_char(hamiltonian_set_sign(g, ham))}\n")
    out.write("circle : " + " ".join(map(str, ham.circle.order)) + "\n")
    return 0


def _grid_spec(args):
    signing = {}
    if args.signs and args.signs != "all-plus":
        signing = parse_signing(_read(args.signs))
    return GridSpec(args.m, args.n, signing)


def cmd_grid(args, out):
    spec = _grid_spec(args)
    grid = build_grid(spec)
    g = grid.graph
    if args.coham:
        seq = realize_face_sequence(
            g, [grid.box_face(b) for b in canonical_coham_boxes(spec.m, spec.n)]
        )
        for e in seq.edges:
            g = g.delete_edge(e).graph
    _print_graph(out, g, args.output)
    return 0


def cmd_trigrid(args, out):
    spec = _grid_spec(args)
    policy = None
    if args.diagonals:
        policy = parse_diagonals(_read(args.diagonals))
    grid = build_triangulated_grid(spec, policy)
    _print_graph(out, grid.graph, args.output)
    return 0


def _report_pair(out, graph, pair):
    if pair is None:
        out.write("result none\n")
        return 0
    h1, h2 = pair
    if graph.circle_sign(h1) == POSITIVE:
        plus, minus = h1, h2
    else:
        plus, minus = h2, h1
    out.write("result both-signs\n")
    out.write("circle + : " + " ".join(map(str, plus.order)) + "\n")
    out.write("circle - : " + " ".join(map(str, minus.order)) + "\n")
    return 0


def cmd_certify_ladder(args, out):
    g = _graph(args)
    cfg = parse_ladder_config(_read(args.config))
    return _report_pair(out, g, certify_ladder(g, cfg))


def cmd_certify_hex(args, out):
    g = _graph(args)
    cfg = parse_hex_config(_read(args.config))
    return _report_pair(out, g, certify_hexagon(g, cfg))


def cmd_export_dot(args, out):
    g = _graph(args)
    if args.dual:
        out.write(face_graph_dot(weak_dual(g)))
    else:
        out.write(graph_dot(g))
    return 0


# -- dispatch --------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="planesign",
        description="Plane signed graphs: faces, duals, Hamiltonian circle signs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(func=func)
        return p

    p = add("faces", cmd_faces, help="list all face walks")
    p.add_argument("file")

    p = add("dual", cmd_dual, help="weak dual with (phi, degree) labels")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true")

    p = add("check", cmd_check, help="structural self-checks")
    p.add_argument("file")

    p = add("ham", cmd_ham, help="enumerate Hamiltonian circles")
    p.add_argument("file")
    p.add_argument("--limit", type=int)

    p = add("census", cmd_census, help="count circle signs")
    p.add_argument("file")
    p.add_argument("--limit", type=int)

    p = add("peel", cmd_peel, help="one peeling step against a circle")
    p.add_argument("file")
    p.add_argument("--circle", required=True, metavar="V0,V1,...")

    p = add("coham", cmd_coham, help="produce or validate a co-Hamiltonian sequence")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--from-circle", metavar="V0,V1,...")
    group.add_argument("--apply", metavar="SEQFILE")
    p.add_argument("--grid", nargs=2, type=int, metavar=("M", "N"))

    p = add("grid", cmd_grid, help="emit an m x n grid file")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--signs", default="all-plus", metavar="FILE|all-plus")
    p.add_argument("--coham", action="store_true",
                   help="delete the canonical co-Hamiltonian sequence first")
    p.add_argument("-o", "--output")

    p = add("trigrid", cmd_trigrid, help="emit a triangulated grid file")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--signs", default="all-plus", metavar="FILE|all-plus")
    p.add_argument("--diagonals", metavar="FILE")
    p.add_argument("-o", "--output")

    p = add("certify-ladder", cmd_certify_ladder, help="ladder opposite-sign certificate")
    p.add_argument("file")
    p.add_argument("config")

    p = add("certify-hex", cmd_certify_hex, help="hexagon opposite-sign certificate")
    p.add_argument("file")
    p.add_argument("config")

    p = add("export-dot", cmd_export_dot, help="DOT export of the graph or its dual")
    p.add_argument("file")
    p.add_argument("--dual", action="store_true")

    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 2
    except PlaneSignError as exc:
        print(f"error: {exc.name}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
