"""Command-line front end.

Exit codes: 0 success or "yes", 1 definite "no", 2 capability exceeded
(width cap, oracle size guard), 3 input error (unreadable or invalid
files, graphs that fail validation, inputs outside a method's
precondition), 4 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .book import book_embed, book_to_json, serialize_book
from .completion import Completion, induced_path, normalize, validate_completion
from .errors import CapabilityExceeded, InputError, InternalInvariantBroken, StBookError, WidthCapExceeded
from .generate import GenConfig, gen_random_nfree, gen_random_st
from .graph import EmbeddedStDigraph, build_dual, check_st, order_dual, trace_faces
from .mss import min_setup_schedule, mss_decide
from .nfree import complete_auto, complete_hfree, complete_nfree
from .oracle import oracle_count, oracle_exists
from .patterns import find_embedded_H, find_embedded_N
from .render import render_dot, render_svg
from .width import poset_width

EXIT_OK = 0
EXIT_NO = 1
EXIT_CAPABILITY = 2
EXIT_INPUT = 3
EXIT_INTERNAL = 4


class _Failure(Exception):
    """Usage-level problem detected by the CLI itself (exit 3)."""


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _Failure(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str):
    return io.parse_graph(_read(path))


def _load_st(path: str) -> EmbeddedStDigraph:
    return check_st(_load_graph(path))


def _load_set(g, path: str) -> Completion:
    comp = io.parse_set(_read(path))
    io.check_set_ids(g, comp.edges, comp.path)
    return comp


def _dump(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _json_text(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _emit_set(args, comp: Completion, extra: dict | None = None) -> None:
    if args.json:
        doc = io.set_to_json(comp.edges, comp.path)
        if extra:
            doc.update(extra)
        _dump(_json_text(doc), args.out)
    else:
        _dump(io.serialize_set(comp.edges, comp.path), args.out)


def _print(args, text: str, doc: dict) -> None:
    if args.json:
        sys.stdout.write(_json_text({"command": args.command, "version": io.VERSION, **doc}))
    else:
        sys.stdout.write(text)


# commands


def cmd_validate(args) -> int:
    g = _load_graph(args.graph)
    if len(g.sources()) == 1 and len(g.sinks()) == 1:
        st = check_st(g)
        fs = trace_faces(st)
        text = f"ok st-digraph n={st.n} m={st.m} source={st.s} sink={st.t} faces={fs.inner_count}\n"
        doc = {"ok": True, "st": True, "n": st.n, "m": st.m, "source": st.s, "sink": st.t, "inner_faces": fs.inner_count}
    else:
        text = f"ok embedded digraph n={g.n} m={g.m} sources={g.sources()} sinks={g.sinks()}\n"
        doc = {"ok": True, "st": False, "n": g.n, "m": g.m, "sources": g.sources(), "sinks": g.sinks()}
    _print(args, text, doc)
    return EXIT_OK


def cmd_faces(args) -> int:
    g = _load_st(args.graph)
    fs = trace_faces(g)
    lines = []
    docs = []
    for f in fs.faces:
        tokens = ["face", f.id, f.kind, "source", f.source, "sink", f.sink, "left", *f.left, "right", *f.right]
        lines.append(" ".join(map(str, tokens)))
        docs.append({"id": f.id, "kind": f.kind, "source": f.source, "sink": f.sink, "left": list(f.left), "right": list(f.right)})
    _print(args, "\n".join(lines) + "\n", {"faces": docs, "s_star": fs.s_star, "t_star": fs.t_star})
    return EXIT_OK


def cmd_dual(args) -> int:
    g = _load_st(args.graph)
    d = build_dual(g)
    order = order_dual(d)
    lines = [f"faces {d.face_count}", f"s* {d.s_star}", f"t* {d.t_star}"]
    lines += [f"arc {a} {b}" for a, b in d.edges]
    lines.append("order " + " ".join(map(str, order)))
    doc = {"faces": d.face_count, "s_star": d.s_star, "t_star": d.t_star, "arcs": [list(e) for e in d.edges], "order": order}
    _print(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK


def cmd_detect(args) -> int:
    g = _load_graph(args.graph)
    occ = find_embedded_N(g) or find_embedded_H(g)
    if occ is None:
        _print(args, "none\n", {"occurrence": None})
    else:
        doc = {"occurrence": {"kind": occ.kind, "a": occ.a, "b": occ.b, "c": occ.c, "d": occ.d}}
        _print(args, f"{occ}\n", doc)
    return EXIT_OK


def cmd_width(args) -> int:
    g = _load_graph(args.graph)
    info = poset_width(g)
    lines = [f"width {info.width}"]
    lines += [f"chain {i} " + " ".join(map(str, c)) for i, c in enumerate(info.chains)]
    lines.append("antichain " + " ".join(map(str, info.antichain)))
    doc = {"width": info.width, "chains": [list(c) for c in info.chains], "antichain": list(info.antichain)}
    _print(args, "\n".join(lines) + "\n", doc)
    return EXIT_OK


def cmd_complete(args) -> int:
    g = _load_st(args.graph)
    if args.method == "nfree":
        comp = complete_nfree(g)
    elif args.method == "hfree":
        comp = complete_hfree(g)
    elif args.method == "mss":
        comp = mss_decide(g, width_cap=args.width_cap)
        if comp is None:
            _print(args, "no\n", {"status": "no", "method": "mss"})
            return EXIT_NO
    else:
        res = complete_auto(g, width_cap=args.width_cap)
        if res.completion is None:
            _print(args, "no\n", {"status": "no", "method": res.method})
            return EXIT_NO
        comp = res.completion
    _emit_set(args, comp)
    return EXIT_OK


def cmd_normalize(args) -> int:
    g = _load_st(args.graph)
    comp = normalize(g, _load_set(g, args.set).edges)
    _emit_set(args, comp)
    return EXIT_OK


def cmd_validate_set(args) -> int:
    g = _load_st(args.graph)
    comp = _load_set(g, args.set)
    report = validate_completion(g, comp.edges)
    if report.ok and comp.path is not None and tuple(induced_path(g, comp.edges)) != tuple(comp.path):
        report.fail("path-endpoint", "recorded path differs from the induced path")
    doc = {"ok": report.ok, "failures": [{"check": c, "witness": str(w)} for c, w in report.failures]}
    _print(args, f"{report}\n", doc)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_decide(args) -> int:
    g = _load_st(args.graph)
    stats: dict = {}
    try:
        comp = mss_decide(g, width_cap=args.width_cap, stats=stats)
    except CapabilityExceeded as exc:
        _print(args, f"width-cap-exceeded: {exc}\n", {"status": "width-cap-exceeded", "message": str(exc)})
        return EXIT_CAPABILITY
    if comp is None:
        _print(args, "no\n", {"status": "no", "width": stats["width"], "expanded": stats["expanded"]})
        return EXIT_NO
    if args.json:
        _emit_set(args, comp, {"status": "yes", "width": stats["width"], "expanded": stats["expanded"]})
    else:
        if args.out is not None:
            sys.stdout.write("yes\n")
        _dump(io.serialize_set(comp.edges, comp.path), args.out)
    return EXIT_OK


def cmd_mss(args) -> int:
    g = _load_graph(args.graph)
    costs = io.parse_costs(_read(args.costs))
    if costs.shape != (g.n, g.n):
        raise _Failure(f"cost matrix is {costs.shape[0]}x{costs.shape[1]}, graph has {g.n} vertices")
    info = poset_width(g)
    if info.width > args.width_cap:
        raise WidthCapExceeded(info.width, args.width_cap)
    res = min_setup_schedule(g.n, g.edges, costs, info)
    text = f"cost {res.total_cost}\nschedule {' '.join(map(str, res.schedule))}\n"
    _print(args, text, {"cost": res.total_cost, "schedule": list(res.schedule), "states": res.states})
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _load_st(args.graph)
    if args.count:
        k = oracle_count(g)
        _print(args, f"{k}\n", {"count": k})
        return EXIT_OK
    comp = oracle_exists(g)
    if comp is None:
        _print(args, "no\n", {"status": "no"})
        return EXIT_NO
    _emit_set(args, comp)
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GenConfig(args.n, density=args.density, transitive=args.transitive, seed=args.seed)
    g = gen_random_nfree(cfg) if args.nfree else gen_random_st(cfg)
    text = _json_text(io.graph_to_json(g)) if args.json else io.serialize_graph(g)
    _dump(text, args.out)
    return EXIT_OK


def _book(args):
    g = _load_st(args.graph)
    comp = _load_set(g, args.set) if args.set else Completion((), None)
    report = validate_completion(g, comp.edges)
    if not report.ok:
        raise _Failure(f"completion set is not valid:\n{report}")
    return g, comp, book_embed(g, comp.edges, comp.path)


def cmd_book_embed(args) -> int:
    _, _, book = _book(args)
    text = _json_text(book_to_json(book)) if args.json else serialize_book(book)
    _dump(text, args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    if args.format == "dot":
        g = _load_graph(args.graph)
        comp = _load_set(g, args.set) if args.set else Completion((), None)
        _dump(render_dot(g, comp.edges, comp.path), args.out)
    else:
        _, _, book = _book(args)
        _dump(render_svg(book), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    parser = argparse.ArgumentParser(prog="stbook", description="Crossing-free acyclic Hamiltonian path completion.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_text, graph=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if graph:
            p.add_argument("graph", help="graph file")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a graph file")
    add("faces", cmd_faces, "list faces with their borders")
    add("dual", cmd_dual, "dual graph and its topological order")
    add("detect", cmd_detect, "look for an embedded N or H")
    add("width", cmd_width, "poset width and a minimum chain cover")

    p = add("complete", cmd_complete, "build a completion set")
    p.add_argument("--method", choices=["nfree", "hfree", "mss", "auto"], default="auto")
    p.add_argument("--width-cap", type=int, default=6)
    p.add_argument("--out")

    p = add("normalize", cmd_normalize, "reduce to at most two completion edges per face")
    p.add_argument("set", help="completion set file")
    p.add_argument("--out")

    p = add("validate-set", cmd_validate_set, "check a completion set")
    p.add_argument("set", help="completion set file")

    p = add("decide", cmd_decide, "decide existence by minimum setup scheduling")
    p.add_argument("--width-cap", type=int, default=6)
    p.add_argument("--out")

    p = add("mss", cmd_mss, "solve a minimum setup scheduling instance")
    p.add_argument("--costs", required=True, help="cost matrix file")
    p.add_argument("--width-cap", type=int, default=6)

    p = add("oracle", cmd_oracle, "exhaustive search (small graphs only)")
    p.add_argument("--count", action="store_true")
    p.add_argument("--out")

    p = add("gen", cmd_gen, "generate a random st-digraph", graph=False)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--density", type=float, default=0.6)
    p.add_argument("--transitive", type=float, default=0.15)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--nfree", action="store_true")
    p.add_argument("--out")

    p = add("book-embed", cmd_book_embed, "two-page book embedding from a completion set")
    p.add_argument("set", nargs="?", help="completion set file (empty set if omitted)")
    p.add_argument("--out")

    p = add("render", cmd_render, "DOT or SVG drawing")
    p.add_argument("set", nargs="?", help="completion set file")
    p.add_argument("--format", choices=["dot", "svg"], default="svg")
    p.add_argument("--out")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapabilityExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except (InputError, _Failure, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInvariantBroken as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except StBookError as exc:
        # precondition failures such as an embedded N under --method nfree
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
