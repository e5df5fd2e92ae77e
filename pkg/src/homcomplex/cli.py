"""Command line front end.

    homcomplex classify --g G.txt --h H.txt [--format text]
    homcomplex reconfigure --g G.txt --h H.txt --seed-hom 0,1 --to 2,1
    homcomplex pi --g G.txt --h H.txt --seed-hom 0,1
    homcomplex coverball --h H.txt --root 0 --radius 3 [--dot ball.dot]

Exit status: 0 success, 1 usage / input / resource error, 2 verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .classify import (
    SCHEMA_VERSION,
    InputError,
    base_vertex,
    check_inputs,
    classify_component,
    classify_pair,
)
from .complex import DEFAULT_MAX_CELLS, DEFAULT_MAX_DIM, DEFAULT_MAX_SIMPLICES
from .freegroup import format_word
from .graph import GraphError, find_square, read_graph
from .homs import DEFAULT_MAX_HOMS, ResourceLimitError, find_xhomotopy_path, fold_reduce, reconfig_components
from .twocover import DEFAULT_MAX_BALL, cover_ball, verify_two_covering

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def _max_dim(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {value}")
    return value


def parse_hom_spec(spec: str) -> tuple:
    try:
        return tuple(int(t) for t in spec.split(","))
    except ValueError:
        raise UsageError(f"bad hom spec {spec!r}: expected comma-separated integers") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="homcomplex", description="Hom complexes of graphs with square-free targets.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graphs(sp, need_g=True):
        if need_g:
            sp.add_argument("--g", required=True, help="edge-list file for G")
        sp.add_argument("--h", required=True, help="edge-list file for H")

    def caps(sp):
        sp.add_argument("--max-homs", type=_positive, default=DEFAULT_MAX_HOMS)
        sp.add_argument("--max-cells", type=_positive, default=DEFAULT_MAX_CELLS)
        sp.add_argument("--max-simplices", type=_positive, default=DEFAULT_MAX_SIMPLICES,
                        help="simplex cap for the order-complex cross-check under --debug-checks")
        sp.add_argument("--max-dim", type=_max_dim, default=DEFAULT_MAX_DIM)
        sp.add_argument("--fold", action="store_true", help="fold-reduce H first")
        sp.add_argument("--debug-checks", action="store_true",
                        help="assert dd=0, neighbour independence and order-complex agreement")
        sp.add_argument("--format", choices=("json", "text"), default="json")

    c = sub.add_parser("classify", help="classify every component of Hom(G,H)")
    graphs(c)
    caps(c)
    c.add_argument("--seed-hom", help="only the component of this hom")
    c.add_argument("--no-pi", action="store_true", help="skip realizable-subgroup computation")
    c.add_argument("--timing", action="store_true", help="add wall-clock seconds to stats")

    r = sub.add_parser("reconfigure", help="shortest x-homotopy between two homs")
    graphs(r)
    caps(r)
    r.add_argument("--seed-hom", required=True, help="source hom, e.g. 0,1")
    r.add_argument("--to", required=True, help="target hom")
    r.add_argument("--dot", help="write the reconfiguration graph as DOT")

    pi = sub.add_parser("pi", help="realizable subgroup Pi(f,v)")
    graphs(pi)
    caps(pi)
    pi.add_argument("--seed-hom", required=True)

    b = sub.add_parser("coverball", help="ball in the universal 2-cover of H")
    graphs(b, need_g=False)
    b.add_argument("--root", type=int, default=0)
    b.add_argument("--radius", type=int, required=True)
    b.add_argument("--max-ball", type=_positive, default=DEFAULT_MAX_BALL)
    b.add_argument("--dot", help="write the ball as DOT")
    b.add_argument("--format", choices=("json", "text"), default="json")
    return p


def _emit(data: dict, fmt: str, text: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(data, indent=2) + "\n")
    else:
        sys.stdout.write(text)


def _target(args):
    G = read_graph(args.g)
    H = read_graph(args.h)
    if args.fold:
        H, _ = fold_reduce(H)
    return G, H


def cmd_classify(args) -> int:
    G = read_graph(args.g)
    H = read_graph(args.h)
    seed = parse_hom_spec(args.seed_hom) if args.seed_hom else None
    report = classify_pair(
        G, H,
        g_name=args.g, h_name=args.h,
        max_homs=args.max_homs, max_cells=args.max_cells, max_dim=args.max_dim,
        fold=args.fold, debug_checks=args.debug_checks, seed=seed,
        with_pi=not args.no_pi, timing=args.timing, max_simplices=args.max_simplices,
    )
    data = report.as_dict()
    lines = [
        f"Hom({args.g}, {args.h}): {len(report.components)} component(s), "
        f"chi(H) = {data['input']['chi_h']}",
    ]
    for comp in data["components"]:
        lines.append(
            f"  [{comp['id']}] homs={comp['size_homs']} cells={comp['cells']} "
            f"image={comp['image_class']} prediction={comp['prediction']} "
            f"betti={comp['betti']} verdict={comp['verdict']}"
        )
    for ch in data["checks"]:
        lines.append(f"  check {ch['name']}: {'pass' if ch['pass'] else 'FAIL'} ({ch['detail']})")
    _emit(data, args.format, "\n".join(lines) + "\n")
    return EXIT_OK if report.all_match else EXIT_MISMATCH


def cmd_reconfigure(args) -> int:
    G, H = _target(args)
    f, g = parse_hom_spec(args.seed_hom), parse_hom_spec(args.to)
    rg = reconfig_components(G, H, args.max_homs)
    for h in (f, g):
        if h not in rg.index:
            raise UsageError(f"{','.join(map(str, h))} is not a homomorphism G -> H")
    path = find_xhomotopy_path(rg, f, g)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(reconfig_dot(rg))
    if path is None:
        data = {"schema": SCHEMA_VERSION, "reachable": False, "path": None}
        text = "unreachable\n"
    else:
        data = {
            "schema": SCHEMA_VERSION,
            "reachable": True,
            "length": len(path) - 1,
            "path": [list(h) for h in path],
        }
        text = f"length {len(path) - 1}\n" + "".join(
            f"  {i}: {','.join(map(str, h))}\n" for i, h in enumerate(path)
        )
    _emit(data, args.format, text)
    return EXIT_OK


def reconfig_dot(rg) -> str:
    lines = ["graph reconfig {"]
    for i, h in enumerate(rg.homs):
        lines.append(f'  {i} [label="{",".join(map(str, h))}" component={rg.component_id[i]}];')
    for a, b in rg.edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_pi(args) -> int:
    G, H = _target(args)
    check_inputs(G, H)
    f = parse_hom_spec(args.seed_hom)
    rg = reconfig_components(G, H, args.max_homs)
    if f not in rg.index:
        raise UsageError(f"{args.seed_hom} is not a homomorphism G -> H")
    comp = classify_component(
        G, H, f, rg, max_cells=args.max_cells, max_dim=args.max_dim,
        debug_checks=args.debug_checks, max_simplices=args.max_simplices,
    )
    pi = comp.pi
    data = {
        "schema": SCHEMA_VERSION,
        "hom": list(f),
        "base_vertex": base_vertex(G),
        "rank": pi.rank,
        "class": pi.subgroup_class.value,
        "generators": [format_word(w) for w in pi.generators],
        "image_class": comp.image_class.value,
        "image_generators": [format_word(w) for w in comp.image_words],
        "trichotomy_consistent": comp.trichotomy_ok,
        "component_b1": comp.profile.b(1),
        "rank_equals_b1": comp.pi_consistent,
    }
    text = (
        f"Pi(f,v) for f={args.seed_hom}, v={data['base_vertex']}: class {data['class']}, "
        f"rank {pi.rank}\n"
        + "".join(f"  generator {w}\n" for w in data["generators"])
        + f"image of f_*: {data['image_class']}\n"
        + f"trichotomy consistent: {comp.trichotomy_ok}\n"
        + f"component b1 = {data['component_b1']}, rank matches: {comp.pi_consistent}\n"
    )
    _emit(data, args.format, text)
    return EXIT_OK if comp.trichotomy_ok and comp.pi_consistent else EXIT_MISMATCH


def cmd_coverball(args) -> int:
    H = read_graph(args.h)
    if not 0 <= args.root < H.n:
        raise UsageError(f"root {args.root} out of range")
    sq = find_square(H)
    if not H.is_simple() or sq is not None:
        what = f"looped vertex {H.loops[0]}" if not H.is_simple() else f"4-cycle ({','.join(map(str, sq))})"
        raise UsageError(f"H is not square-free: {what}")
    ball = cover_ball(H, args.root, args.radius, args.max_ball)
    ok = verify_two_covering(ball)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(ball.to_dot())
    data = {
        "schema": SCHEMA_VERSION,
        "root": args.root,
        "radius": args.radius,
        "vertices": len(ball.walks),
        "edges": ball.tree.num_edges,
        "by_depth": ball.counts_by_depth(),
        "is_tree": ball.is_tree(),
        "verified": ok,
    }
    text = (
        f"cover ball r={args.radius} at {args.root}: {data['vertices']} vertices, "
        f"{data['edges']} edges, per depth {data['by_depth']}, verified {ok}\n"
    )
    _emit(data, args.format, text)
    return EXIT_OK if ok else EXIT_MISMATCH


COMMANDS = {
    "classify": cmd_classify,
    "reconfigure": cmd_reconfigure,
    "pi": cmd_pi,
    "coverball": cmd_coverball,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (InputError, UsageError, GraphError, ResourceLimitError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except AssertionError as exc:
        print(f"debug check failed: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
