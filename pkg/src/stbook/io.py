"""Text and JSON formats for graphs, completion sets and cost matrices.

Text formats are line oriented; ``#`` starts a comment and blank lines are
ignored.  Serialization is canonical, so ``serialize(parse(x))`` is stable.
JSON documents carry the same fields plus ``format`` and ``version``.
"""

from __future__ import annotations

import json
from typing import Iterable, Sequence

import numpy as np

from .completion import Completion, CompletionEdge
from .errors import FormatSyntaxError, SemanticError
from .graph import EmbeddedDigraph, EmbeddedStDigraph, build_graph, check_st

VERSION = 1


def _lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].split()
        if line:
            out.append((no, line))
    return out


def _ints(tokens: Sequence[str], no: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatSyntaxError(f"expected integers, got {' '.join(tokens)!r}", no) from None


def _header(lines, kind: str) -> None:
    if not lines:
        raise FormatSyntaxError(f"empty file, expected '{kind} {VERSION}'", 1)
    no, toks = lines[0]
    if toks[0] != kind or len(toks) != 2:
        raise FormatSyntaxError(f"expected '{kind} {VERSION}'", no)
    if toks[1] != str(VERSION):
        raise FormatSyntaxError(f"unsupported {kind} version {toks[1]}", no)


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _load_json(text: str, kind: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatSyntaxError(exc.msg, exc.lineno) from None
    if not isinstance(doc, dict) or doc.get("format") != kind:
        raise SemanticError(f"JSON document is not a {kind} document")
    if doc.get("version") != VERSION:
        raise SemanticError(f"unsupported {kind} version {doc.get('version')}")
    return doc


# graphs


def _finish_graph(n, edges, out_rot, in_rot, source, sink) -> EmbeddedDigraph:
    g = build_graph(n, edges, out_rot, in_rot)
    if source is None and sink is None:
        return g
    st = check_st(g)
    if source is not None and source != st.s:
        raise SemanticError(f"declared source {source} but the unique source is {st.s}")
    if sink is not None and sink != st.t:
        raise SemanticError(f"declared sink {sink} but the unique sink is {st.t}")
    return st


def parse_graph(text: str) -> EmbeddedDigraph:
    """Parse a graph file; an st-digraph comes back when source or sink is declared."""
    if _is_json(text):
        return _graph_from_json(_load_json(text, "hpcgraph"))
    lines = _lines(text)
    _header(lines, "hpcgraph")
    n = m = source = sink = None
    edges: dict[int, tuple[int, int]] = {}
    rots: dict[int, tuple[list[int], list[int]]] = {}
    for no, toks in lines[1:]:
        key = toks[0]
        if key in ("n", "m", "source", "sink"):
            if len(toks) != 2:
                raise FormatSyntaxError(f"'{key}' takes one value", no)
            (val,) = _ints(toks[1:], no)
            if key == "n":
                n = val
            elif key == "m":
                m = val
            elif key == "source":
                source = val
            else:
                sink = val
        elif key == "edge":
            if len(toks) != 4:
                raise FormatSyntaxError("expected 'edge <id> <tail> <head>'", no)
            i, u, v = _ints(toks[1:], no)
            if i != len(edges):
                raise SemanticError(f"line {no}: edge ids must be consecutive, expected {len(edges)} got {i}")
            edges[i] = (u, v)
        elif key == "rot":
            if len(toks) < 4 or toks[2] != "out" or "in" not in toks[3:]:
                raise FormatSyntaxError("expected 'rot <v> out <ids> in <ids>'", no)
            (v,) = _ints(toks[1:2], no)
            split = toks.index("in", 3)
            outs = _ints(toks[3:split], no)
            ins = _ints(toks[split + 1 :], no)
            if v in rots:
                raise SemanticError(f"line {no}: second rotation for vertex {v}")
            rots[v] = (outs, ins)
        else:
            raise FormatSyntaxError(f"unknown keyword {key!r}", no)
    if n is None or m is None:
        raise SemanticError("missing 'n' or 'm' line")
    if len(edges) != m:
        raise SemanticError(f"declared m {m} but found {len(edges)} edge lines")
    for v in rots:
        if not 0 <= v < n:
            raise SemanticError(f"rotation for unknown vertex {v}")
    if len(rots) != n:
        missing = sorted(set(range(n)) - set(rots))
        raise SemanticError(f"missing rotation lines for vertices {missing}")
    for u, v in edges.values():
        if not (0 <= u < n and 0 <= v < n):
            raise SemanticError(f"edge ({u},{v}) names a vertex outside 0..{n - 1}")
    edge_list = [edges[i] for i in range(m)]
    return _finish_graph(n, edge_list, [rots[v][0] for v in range(n)], [rots[v][1] for v in range(n)], source, sink)


def _graph_from_json(doc: dict) -> EmbeddedDigraph:
    try:
        n, m = int(doc["n"]), int(doc["m"])
        edges = [(int(u), int(v)) for u, v in doc["edges"]]
        rot = doc["rot"]
        out_rot = [[int(e) for e in r["out"]] for r in rot]
        in_rot = [[int(e) for e in r["in"]] for r in rot]
    except (KeyError, TypeError, ValueError) as exc:
        raise SemanticError(f"malformed hpcgraph document: {exc}") from None
    if len(edges) != m:
        raise SemanticError(f"declared m {m} but found {len(edges)} edges")
    if len(rot) != n:
        raise SemanticError(f"declared n {n} but found {len(rot)} rotations")
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise SemanticError(f"edge ({u},{v}) names a vertex outside 0..{n - 1}")
    return _finish_graph(n, edges, out_rot, in_rot, doc.get("source"), doc.get("sink"))


def serialize_graph(g: EmbeddedDigraph) -> str:
    out = [f"hpcgraph {VERSION}", f"n {g.n}", f"m {g.m}"]
    if isinstance(g, EmbeddedStDigraph):
        out += [f"source {g.s}", f"sink {g.t}"]
    out += [f"edge {i} {u} {v}" for i, (u, v) in enumerate(g.edges)]
    for v in range(g.n):
        parts = ["rot", str(v), "out", *map(str, g.out_rot[v]), "in", *map(str, g.in_rot[v])]
        out.append(" ".join(parts))
    return "\n".join(out) + "\n"


def graph_to_json(g: EmbeddedDigraph) -> dict:
    doc = {"format": "hpcgraph", "version": VERSION, "n": g.n, "m": g.m}
    if isinstance(g, EmbeddedStDigraph):
        doc["source"] = g.s
        doc["sink"] = g.t
    doc["edges"] = [list(e) for e in g.edges]
    doc["rot"] = [{"out": list(g.out_rot[v]), "in": list(g.in_rot[v])} for v in range(g.n)]
    return doc


# completion sets


def parse_set(text: str) -> Completion:
    """Completion edges plus the path if the file records one (else None)."""
    if _is_json(text):
        doc = _load_json(text, "hpcset")
        try:
            edges = tuple(CompletionEdge(int(a), int(b), int(f)) for a, b, f in doc["cedges"])
            k = int(doc["k"])
            path = doc.get("path")
            path = None if path is None else tuple(int(v) for v in path)
        except (KeyError, TypeError, ValueError) as exc:
            raise SemanticError(f"malformed hpcset document: {exc}") from None
        if k != len(edges):
            raise SemanticError(f"declared k {k} but found {len(edges)} edges")
        return Completion(edges, path)
    lines = _lines(text)
    _header(lines, "hpcset")
    k = None
    edges = []
    path = None
    for no, toks in lines[1:]:
        key = toks[0]
        if path is not None:
            raise FormatSyntaxError("'path' must be the last line", no)
        if key == "k":
            if len(toks) != 2:
                raise FormatSyntaxError("'k' takes one value", no)
            (k,) = _ints(toks[1:], no)
        elif key == "cedge":
            if len(toks) != 4:
                raise FormatSyntaxError("expected 'cedge <tail> <head> <face>'", no)
            edges.append(CompletionEdge(*_ints(toks[1:], no)))
        elif key == "path":
            path = tuple(_ints(toks[1:], no))
        else:
            raise FormatSyntaxError(f"unknown keyword {key!r}", no)
    if k is None:
        raise SemanticError("missing 'k' line")
    if k != len(edges):
        raise SemanticError(f"declared k {k} but found {len(edges)} cedge lines")
    return Completion(tuple(edges), path)


def serialize_set(edges: Iterable[CompletionEdge], path: Sequence[int] | None = None) -> str:
    edges = [CompletionEdge(*e) for e in edges]
    out = [f"hpcset {VERSION}", f"k {len(edges)}"]
    out += [f"cedge {e.tail} {e.head} {e.face}" for e in edges]
    if path is not None:
        out.append("path " + " ".join(map(str, path)))
    return "\n".join(out) + "\n"


def set_to_json(edges: Iterable[CompletionEdge], path: Sequence[int] | None = None) -> dict:
    edges = [list(CompletionEdge(*e)) for e in edges]
    doc = {"format": "hpcset", "version": VERSION, "k": len(edges), "cedges": edges}
    if path is not None:
        doc["path"] = list(path)
    return doc


def check_set_ids(g: EmbeddedDigraph, edges: Iterable[CompletionEdge], path: Sequence[int] | None = None) -> None:
    """Reject vertex ids outside the graph."""
    for e in edges:
        if not (0 <= e.tail < g.n and 0 <= e.head < g.n):
            raise SemanticError(f"completion edge {tuple(e)} names a vertex outside the graph")
    if path is not None and any(not 0 <= v < g.n for v in path):
        raise SemanticError("path names a vertex outside the graph")


# cost matrices


def parse_costs(text: str) -> np.ndarray:
    if _is_json(text):
        doc = _load_json(text, "hpccost")
        try:
            n = int(doc["n"])
            mat = np.array(doc["rows"], dtype=np.int64)
        except (KeyError, TypeError, ValueError) as exc:
            raise SemanticError(f"malformed hpccost document: {exc}") from None
        if mat.shape != (n, n):
            raise SemanticError(f"expected a {n}x{n} matrix, got shape {mat.shape}")
        return mat
    lines = _lines(text)
    _header(lines, "hpccost")
    if len(lines) < 2 or lines[1][1][0] != "n" or len(lines[1][1]) != 2:
        raise FormatSyntaxError("expected 'n <N>'", lines[1][0] if len(lines) > 1 else 2)
    (n,) = _ints(lines[1][1][1:], lines[1][0])
    rows = []
    for no, toks in lines[2:]:
        row = _ints(toks, no)
        if len(row) != n:
            raise SemanticError(f"line {no}: expected {n} entries, got {len(row)}")
        rows.append(row)
    if len(rows) != n:
        raise SemanticError(f"expected {n} rows, got {len(rows)}")
    return np.array(rows, dtype=np.int64).reshape(n, n)


def serialize_costs(mat) -> str:
    mat = np.asarray(mat)
    out = [f"hpccost {VERSION}", f"n {mat.shape[0]}"]
    out += [" ".join(str(int(x)) for x in row) for row in mat]
    return "\n".join(out) + "\n"


def costs_to_json(mat) -> dict:
    mat = np.asarray(mat)
    return {"format": "hpccost", "version": VERSION, "n": int(mat.shape[0]), "rows": mat.astype(int).tolist()}
