"""Embedded N / H occurrences and augmentation of N-free digraphs to st-digraphs.

An embedded N is four distinct vertices with edges ``(a,b)``, ``(c,b)``,
``(c,d)`` where ``(a,b)`` lies left of ``(c,b)`` among the in-edges of
``b`` and ``(c,b)`` lies left of ``(c,d)`` among the out-edges of ``c``.
The embedded H is the same pattern in the mirror image.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import ContainsEmbeddedN, NotPlanarEmbedding
from .graph import (
    LARGE_SINK,
    LARGE_SOURCE,
    SMALL_SINK,
    SMALL_SOURCE,
    EmbeddedDigraph,
    EmbeddedStDigraph,
    _dart_tables,
    angle_kind,
    build_graph,
    check_st,
    dart_head,
    mirror,
    trace_cycles,
)


@dataclass(frozen=True)
class PatternOccurrence:
    a: int
    b: int
    c: int
    d: int
    kind: str = "N"

    def __str__(self) -> str:
        return f"{self.kind} at a={self.a} b={self.b} c={self.c} d={self.d}"


def find_embedded_N(g: EmbeddedDigraph) -> PatternOccurrence | None:
    """First embedded N found scanning vertices ``c`` and their out-edges left to right, or None.

    An edge ``(c,b)`` is the middle of an N exactly when it is neither the
    leftmost in-edge of ``b`` nor the rightmost out-edge of ``c`` (up to the
    ``a != d`` requirement), so two sequential passes suffice.
    """
    has_left_in = bytearray(g.m)
    for ins in g.in_rot:
        for e in ins[1:]:
            has_left_in[e] = 1
    edges = g.edges
    for c, outs in enumerate(g.out_rot):
        for j in range(len(outs) - 1):
            e = outs[j]
            if not has_left_in[e]:
                continue
            b = edges[e][1]
            ins = g.in_rot[b]
            i = ins.index(e)
            a = edges[ins[i - 1]][0]
            d = edges[outs[j + 1]][1]
            if a != d:
                return PatternOccurrence(a, b, c, d)
            # adjacent candidates collide; any further one differs from both
            if i >= 2:
                return PatternOccurrence(edges[ins[i - 2]][0], b, c, d)
            if j + 2 < len(outs):
                return PatternOccurrence(a, b, c, edges[outs[j + 2]][1])
    return None


def find_embedded_H(g: EmbeddedDigraph) -> PatternOccurrence | None:
    occ = find_embedded_N(mirror(g))
    if occ is None:
        return None
    return PatternOccurrence(occ.a, occ.b, occ.c, occ.d, "H")


def is_embedded_N(g: EmbeddedDigraph, a: int, b: int, c: int, d: int) -> bool:
    """Direct check of the pattern conditions on a vertex 4-tuple."""
    if len({a, b, c, d}) != 4:
        return False
    idx = g.edge_index
    ab, cb, cd = idx.get((a, b)), idx.get((c, b)), idx.get((c, d))
    if ab is None or cb is None or cd is None:
        return False
    ins = g.in_rot[b]
    outs = g.out_rot[c]
    return ins.index(ab) < ins.index(cb) and outs.index(cb) < outs.index(cd)


def brute_force_N(g: EmbeddedDigraph) -> list[PatternOccurrence]:
    """Every embedded N, by scanning all vertex 4-tuples."""
    return [
        PatternOccurrence(a, b, c, d)
        for a, b, c, d in permutations(range(g.n), 4)
        if is_embedded_N(g, a, b, c, d)
    ]


# -- augmentation -----------------------------------------------------------


def _switches(g: EmbeddedDigraph, cyc: list[int]) -> list[tuple[int, int, int]]:
    """(kind, vertex, arrival dart) for every switch angle along a face cycle."""
    out = []
    for d in cyc:
        k = angle_kind(g, d)
        if k:
            out.append((k, dart_head(g, d), d))
    return out


def _is_large(kind: int) -> bool:
    return kind in (LARGE_SOURCE, LARGE_SINK)


def augment_to_st(g: EmbeddedDigraph) -> EmbeddedStDigraph:
    """Turn an embedded N-free upward planar digraph into a planar st-digraph.

    Sinks (sources) whose free angle lies in an inner face are joined to a
    small sink (source) angle of that face; what remains on the outer face
    is joined to a new super-sink (super-source).  Faces are retraced after
    every insertion.
    """
    occ = find_embedded_N(g)
    if occ is not None:
        raise ContainsEmbeddedN(occ)
    if len(g.sources()) == 1 and len(g.sinks()) == 1:
        return check_st(g)

    n = g.n
    edges = [tuple(uv) for uv in g.edges]
    out_rot = [list(r) for r in g.out_rot]
    in_rot = [list(r) for r in g.in_rot]

    while True:
        cur = EmbeddedDigraph(n, tuple(edges), tuple(map(tuple, out_rot)), tuple(map(tuple, in_rot)))
        cw_next, _, _ = _dart_tables(cur)
        faces = []
        outer = None
        for cyc in trace_cycles(cur):
            sw = _switches(cur, cyc)
            n_large = sum(1 for k, _, _ in sw if _is_large(k))
            balance = n_large - (len(sw) - n_large)
            if balance == 2:
                if outer is not None:
                    raise NotPlanarEmbedding("more than one face qualifies as outer face")
                outer = sw
            elif balance != -2:
                raise NotPlanarEmbedding("rotations are not upward consistent")
            else:
                faces.append(sw)
        if outer is None:
            raise NotPlanarEmbedding("no outer face found")
        # inner faces first; the outer face only once they are saturated
        pick = _find_saturation(cur, [f for f in faces if any(_is_large(k) for k, _, _ in f)])
        if pick is None:
            pick = _find_saturation(cur, [outer])
        if pick is None:
            break
        kind, x, z, dz = pick
        e = len(edges)
        rev = dz ^ 1
        if kind == LARGE_SINK:
            edges.append((x, z))
            out_rot[x] = [e]
            # angle at z lies between the in-edges of rev (right) and its cw successor (left)
            in_rot[z].insert(in_rot[z].index(rev >> 1), e)
        else:
            edges.append((z, x))
            in_rot[x] = [e]
            nxt = cw_next[rev]
            out_rot[z].insert(out_rot[z].index(nxt >> 1), e)

    top, bottom = _outer_arcs(outer)
    if len(top) > 1:
        t = n
        n += 1
        out_rot.append([])
        in_rot.append([])
        for v in top:
            e = len(edges)
            edges.append((v, t))
            out_rot[v] = [e]
            in_rot[t].append(e)
    if len(bottom) > 1:
        s = n
        n += 1
        out_rot.append([])
        in_rot.append([])
        for v in reversed(bottom):
            e = len(edges)
            edges.append((s, v))
            in_rot[v] = [e]
            out_rot[s].append(e)
    return check_st(build_graph(n, edges, out_rot, in_rot))


def _find_saturation(g: EmbeddedDigraph, faces: list[list[tuple[int, int, int]]]):
    """A large switch followed by two small switches on one face cycle."""
    for sw in faces:
        k = len(sw)
        for i in range(k):
            kind, x, _ = sw[i]
            if not _is_large(kind):
                continue
            k1, _, _ = sw[(i + 1) % k]
            k2, z, dz = sw[(i + 2) % k]
            if _is_large(k1) or _is_large(k2) or x == z:
                continue
            if g.has_edge(x, z) or g.has_edge(z, x):
                continue
            return kind, x, z, dz
    return None


def _outer_arcs(sw: list[tuple[int, int, int]]) -> tuple[list[int], list[int]]:
    """Large sinks left to right and large sources right to left on the outer face."""
    k = len(sw)
    if k == 2:
        return [], []
    start = None
    for i in range(k):
        if sw[i][0] == LARGE_SOURCE and sw[(i + 1) % k][0] == LARGE_SINK:
            start = (i + 1) % k
            break
    if start is None:
        raise NotPlanarEmbedding("outer face has no source-to-sink transition")
    order = sw[start:] + sw[:start]
    top: list[int] = []
    bottom: list[int] = []
    i = 0
    while i < k and order[i][0] in (LARGE_SINK, SMALL_SOURCE):
        if order[i][0] == LARGE_SINK:
            top.append(order[i][1])
        i += 1
    while i < k:
        if order[i][0] == LARGE_SOURCE:
            bottom.append(order[i][1])
        elif order[i][0] != SMALL_SINK:
            raise NotPlanarEmbedding("outer face arcs are interleaved")
        i += 1
    return top, bottom
