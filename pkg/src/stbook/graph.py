"""Embedded planar digraphs described by left-to-right edge rotations.

Every vertex keeps its outgoing edges in left-to-right order (``out_rot``)
and its incoming edges in left-to-right order (``in_rot``).  For an upward
drawing the clockwise circular rotation at ``v`` is therefore
``out_rot[v]`` followed by ``reversed(in_rot[v])``.

Darts: edge ``e`` yields dart ``2*e`` (tail to head) and dart ``2*e + 1``
(head to tail).  Faces are traced with the face kept on the left of each
dart; after arriving at ``v`` along dart ``d`` the walk continues with the
clockwise successor of ``d ^ 1`` around ``v``.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    CyclicGraph,
    DuplicateEdge,
    MultipleSinks,
    MultipleSources,
    NotPlanarEmbedding,
    RotationMismatch,
)

# angle kinds at the vertex a face walk passes through
NON_SWITCH = 0
SMALL_SOURCE = 1  # between two consecutive out-edges
SMALL_SINK = 2  # between two consecutive in-edges
LARGE_SOURCE = 3  # wrap-around gap below a source
LARGE_SINK = 4  # wrap-around gap above a sink

INNER = "inner"
S_STAR = "s*"
T_STAR = "t*"


@dataclass(frozen=True)
class EmbeddedDigraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    out_rot: tuple[tuple[int, ...], ...]
    in_rot: tuple[tuple[int, ...], ...]
    _cache: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    @property
    def m(self) -> int:
        return len(self.edges)

    def tail(self, e: int) -> int:
        return self.edges[e][0]

    def head(self, e: int) -> int:
        return self.edges[e][1]

    @property
    def edge_index(self) -> dict[tuple[int, int], int]:
        idx = self._cache.get("edge_index")
        if idx is None:
            idx = {uv: e for e, uv in enumerate(self.edges)}
            self._cache["edge_index"] = idx
        return idx

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def successors(self, v: int) -> list[int]:
        return [self.edges[e][1] for e in self.out_rot[v]]

    def predecessors(self, v: int) -> list[int]:
        return [self.edges[e][0] for e in self.in_rot[v]]

    def sources(self) -> list[int]:
        return [v for v in range(self.n) if not self.in_rot[v]]

    def sinks(self) -> list[int]:
        return [v for v in range(self.n) if not self.out_rot[v]]

    def base(self) -> EmbeddedDigraph:
        return self


@dataclass(frozen=True)
class EmbeddedStDigraph(EmbeddedDigraph):
    s: int = 0
    t: int = 0

    def base(self) -> EmbeddedDigraph:
        return EmbeddedDigraph(self.n, self.edges, self.out_rot, self.in_rot)


@dataclass(frozen=True)
class Face:
    id: int
    source: int
    sink: int
    left: tuple[int, ...]
    right: tuple[int, ...]
    kind: str = INNER

    @property
    def left_interior(self) -> tuple[int, ...]:
        return self.left[1:-1]

    @property
    def right_interior(self) -> tuple[int, ...]:
        return self.right[1:-1]

    @property
    def bottom_left(self) -> tuple[int, int]:
        return (self.left[0], self.left[1])

    @property
    def top_left(self) -> tuple[int, int]:
        return (self.left[-2], self.left[-1])

    def boundary_cycle(self) -> list[int]:
        """Cyclic vertex order: right border upward, then left border downward."""
        return list(self.right) + list(reversed(self.left[1:-1]))


@dataclass(frozen=True)
class FaceStructure:
    faces: tuple[Face, ...]
    edge_left: tuple[int, ...]
    edge_right: tuple[int, ...]
    # face having v strictly inside its right border (the face left of v), and vice versa
    face_left_of: tuple[int, ...]
    face_right_of: tuple[int, ...]
    s_star: int
    t_star: int

    @property
    def inner_count(self) -> int:
        return len(self.faces) - 2

    def inner_faces(self) -> tuple[Face, ...]:
        return self.faces[: self.inner_count]

    def is_inner(self, f: int) -> bool:
        return 0 <= f < self.inner_count

    def vertex_faces(self, v: int) -> set[tuple[int, str]]:
        """Incident faces of ``v`` tagged with the role ``v`` plays on them."""
        tags = set()
        for f in self.faces:
            if v == f.source:
                tags.add((f.id, "source"))
            elif v == f.sink:
                tags.add((f.id, "sink"))
            elif v in f.left:
                tags.add((f.id, "left"))
            elif v in f.right:
                tags.add((f.id, "right"))
        return tags

    def opposite_face(self, u: int, v: int) -> int | None:
        """Inner face whose opposite border interiors hold ``u`` and ``v``."""
        f = self.face_right_of[u]
        if f >= 0 and f < self.inner_count and self.face_left_of[v] == f:
            return f
        f = self.face_left_of[u]
        if f >= 0 and f < self.inner_count and self.face_right_of[v] == f:
            return f
        return None


@dataclass(frozen=True)
class DualGraph:
    face_count: int
    edges: tuple[tuple[int, int], ...]
    s_star: int
    t_star: int


def _topological_order(n: int, edges: Iterable[tuple[int, int]]) -> list[int] | None:
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in edges:
        succ[u].append(v)
        indeg[v] += 1
    queue = deque(v for v in range(n) if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return order if len(order) == n else None


def topological_order(g: EmbeddedDigraph) -> list[int]:
    order = g._cache.get("topo")
    if order is None:
        order = _topological_order(g.n, g.edges)
        if order is None:
            raise CyclicGraph("graph contains a directed cycle")
        g._cache["topo"] = order
    return order


def build_graph(
    n: int,
    edges: Sequence[Sequence[int]],
    out_rot: Sequence[Sequence[int]],
    in_rot: Sequence[Sequence[int]],
) -> EmbeddedDigraph:
    """Validate and freeze an embedded digraph.

    Checks index ranges, simple-graph conditions, rotation coverage,
    acyclicity and the Euler face count of the implied rotation system.
    """
    if n < 1:
        raise NotPlanarEmbedding("graph needs at least one vertex")
    edges_t = tuple((int(u), int(v)) for u, v in edges)
    m = len(edges_t)
    seen: set[tuple[int, int]] = set()
    for e, (u, v) in enumerate(edges_t):
        if not (0 <= u < n and 0 <= v < n):
            raise RotationMismatch(f"edge {e} has an endpoint out of range")
        if u == v:
            raise DuplicateEdge(f"edge {e} is a self-loop at {u}")
        if (u, v) in seen or (v, u) in seen:
            raise DuplicateEdge(f"edge {e} = ({u},{v}) duplicates another edge")
        seen.add((u, v))
    if len(out_rot) != n or len(in_rot) != n:
        raise RotationMismatch("need one out- and one in-rotation per vertex")
    out_t = tuple(tuple(int(e) for e in r) for r in out_rot)
    in_t = tuple(tuple(int(e) for e in r) for r in in_rot)
    covered_out = [0] * m
    covered_in = [0] * m
    for v in range(n):
        for e in out_t[v]:
            if not 0 <= e < m or edges_t[e][0] != v:
                raise RotationMismatch(f"out-rotation of {v} lists edge {e} not leaving {v}")
            covered_out[e] += 1
        for e in in_t[v]:
            if not 0 <= e < m or edges_t[e][1] != v:
                raise RotationMismatch(f"in-rotation of {v} lists edge {e} not entering {v}")
            covered_in[e] += 1
    for e in range(m):
        if covered_out[e] != 1 or covered_in[e] != 1:
            raise RotationMismatch(f"edge {e} is not covered exactly once by the rotations")
    if _topological_order(n, edges_t) is None:
        raise CyclicGraph("graph contains a directed cycle")
    g = EmbeddedDigraph(n, edges_t, out_t, in_t)
    if not _connected(g):
        raise NotPlanarEmbedding("graph is not connected")
    faces = trace_cycles(g)
    expected = m - n + 2
    if m == 0:
        expected, got = 1, 1
    else:
        got = len(faces)
    if got != expected:
        raise NotPlanarEmbedding(f"rotation system traces {got} faces, Euler requires {expected}")
    return g


def _connected(g: EmbeddedDigraph) -> bool:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def _dart_tables(g: EmbeddedDigraph):
    """Per dart: clockwise successor around its origin and its rotation position."""
    cached = g._cache.get("darts")
    if cached is not None:
        return cached
    m = g.m
    cw_next = [0] * (2 * m)
    pos = [0] * (2 * m)
    rot_len = [0] * (2 * m)
    for v in range(g.n):
        rot = [2 * e for e in g.out_rot[v]] + [2 * e + 1 for e in reversed(g.in_rot[v])]
        k = len(rot)
        for i, d in enumerate(rot):
            cw_next[d] = rot[(i + 1) % k]
            pos[d] = i
            rot_len[d] = k
    cached = (cw_next, pos, rot_len)
    g._cache["darts"] = cached
    return cached


def dart_head(g: EmbeddedDigraph, d: int) -> int:
    u, v = g.edges[d >> 1]
    return u if d & 1 else v


def dart_tail(g: EmbeddedDigraph, d: int) -> int:
    u, v = g.edges[d >> 1]
    return v if d & 1 else u


def trace_cycles(g: EmbeddedDigraph) -> list[list[int]]:
    """All face cycles as dart sequences (face on the left)."""
    cached = g._cache.get("cycles")
    if cached is not None:
        return cached
    cw_next, _, _ = _dart_tables(g)
    m2 = 2 * g.m
    done = bytearray(m2)
    cycles = []
    for start in range(m2):
        if done[start]:
            continue
        cyc = []
        d = start
        while not done[d]:
            done[d] = 1
            cyc.append(d)
            d = cw_next[d ^ 1]
        cycles.append(cyc)
    g._cache["cycles"] = cycles
    return cycles


def angle_kind(g: EmbeddedDigraph, d: int) -> int:
    """Kind of the angle a face walk turns through after arriving along ``d``."""
    cw_next, pos, rot_len = _dart_tables(g)
    rev = d ^ 1
    nxt = cw_next[rev]
    rev_out = not (rev & 1)
    nxt_out = not (nxt & 1)
    if rev_out != nxt_out:
        return NON_SWITCH
    wrap = pos[rev] == rot_len[rev] - 1 and pos[nxt] == 0
    if rev_out:
        return LARGE_SOURCE if wrap else SMALL_SOURCE
    return LARGE_SINK if wrap else SMALL_SINK


def check_st(g: EmbeddedDigraph) -> EmbeddedStDigraph:
    """Identify the unique source and sink and verify the upward st-embedding."""
    if isinstance(g, EmbeddedStDigraph):
        return g
    sources = g.sources()
    if len(sources) != 1:
        raise MultipleSources(sources)
    sinks = g.sinks()
    if len(sinks) != 1:
        raise MultipleSinks(sinks)
    st = EmbeddedStDigraph(g.n, g.edges, g.out_rot, g.in_rot, s=sources[0], t=sinks[0])
    trace_faces(st)
    return st


def trace_faces(g: EmbeddedStDigraph) -> FaceStructure:
    """Split every face into source, sink, left and right border.

    Raises :class:`NotPlanarEmbedding` when the rotations do not describe
    an upward embedding with ``s`` and ``t`` on the outer face.
    """
    cached = g._cache.get("faces")
    if cached is not None:
        return cached
    if g.m == 0:
        single = (g.s,)
        faces = (
            Face(0, g.s, g.t, (), single, S_STAR),
            Face(1, g.s, g.t, single, (), T_STAR),
        )
        fs = FaceStructure(faces, (), (), (0,), (1,), 0, 1)
        g._cache["faces"] = fs
        return fs

    cycles = trace_cycles(g)
    raw = []  # (dart_of_source_exit, is_outer, cycle)
    outer_idx = None
    for ci, cyc in enumerate(cycles):
        kinds = [angle_kind(g, d) for d in cyc]
        large = [i for i, k in enumerate(kinds) if k in (LARGE_SOURCE, LARGE_SINK)]
        small = [i for i, k in enumerate(kinds) if k in (SMALL_SOURCE, SMALL_SINK)]
        if large:
            if outer_idx is not None or len(large) != 2 or small:
                raise NotPlanarEmbedding("rotations do not describe an upward st-embedding")
            outer_idx = ci
            start = next(i for i in large if kinds[i] == LARGE_SOURCE)
        else:
            if len(small) != 2:
                raise NotPlanarEmbedding("inner face is not bounded by two directed paths")
            start = next(i for i in small if kinds[i] == SMALL_SOURCE)
        raw.append(cyc[start + 1:] + cyc[: start + 1])
    if outer_idx is None:
        raise NotPlanarEmbedding("no outer face found")

    borders = []
    for cyc in raw:
        src = dart_tail(g, cyc[0])
        fwd = [src]
        i = 0
        while i < len(cyc) and not cyc[i] & 1:
            fwd.append(dart_head(g, cyc[i]))
            i += 1
        back = [fwd[-1]]
        while i < len(cyc):
            if not cyc[i] & 1:
                raise NotPlanarEmbedding("face boundary switches direction more than twice")
            back.append(dart_head(g, cyc[i]))
            i += 1
        if back[-1] != src:
            raise NotPlanarEmbedding("face boundary does not close")
        borders.append((fwd, back[::-1]))

    outer_fwd, outer_back = borders[outer_idx]
    if outer_fwd[0] != g.s or outer_fwd[-1] != g.t:
        raise NotPlanarEmbedding("source and sink are not on the outer face")

    # canonical numbering: scan vertices breadth-first from s, out-edges left to right
    m = g.m
    dart_cycle = [0] * (2 * m)
    for ci, cyc in enumerate(raw):
        for d in cyc:
            dart_cycle[d] = ci
    cycle_id = {}
    seen = [False] * g.n
    seen[g.s] = True
    queue = deque([g.s])
    while queue:
        u = queue.popleft()
        for e in g.out_rot[u]:
            for ci in (dart_cycle[2 * e], dart_cycle[2 * e + 1]):
                if ci != outer_idx and ci not in cycle_id:
                    cycle_id[ci] = len(cycle_id)
            w = g.edges[e][1]
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    inner = len(cycle_id)
    s_star, t_star = inner, inner + 1

    # allocate in id order so that walking faces by id stays cache friendly
    faces: list[Face | None] = [None] * (inner + 2)
    for ci, fid in sorted(cycle_id.items(), key=lambda item: item[1]):
        fwd, left = borders[ci]
        faces[fid] = Face(fid, fwd[0], fwd[-1], tuple(left), tuple(fwd), INNER)
    faces[s_star] = Face(s_star, g.s, g.t, (), tuple(outer_fwd), S_STAR)
    faces[t_star] = Face(t_star, g.s, g.t, tuple(outer_back), (), T_STAR)

    edge_left = [0] * m
    edge_right = [0] * m
    for e in range(m):
        lc, rc = dart_cycle[2 * e], dart_cycle[2 * e + 1]
        edge_left[e] = s_star if lc == outer_idx else cycle_id[lc]
        edge_right[e] = t_star if rc == outer_idx else cycle_id[rc]

    left_of = [-1] * g.n
    right_of = [-1] * g.n
    for f in faces:
        for v in f.right[1:-1]:
            left_of[v] = f.id
        for v in f.left[1:-1]:
            right_of[v] = f.id
    fs = FaceStructure(
        tuple(faces), tuple(edge_left), tuple(edge_right), tuple(left_of), tuple(right_of), s_star, t_star
    )
    g._cache["faces"] = fs
    return fs


def build_dual(g: EmbeddedStDigraph, faces: FaceStructure | None = None) -> DualGraph:
    """Dual st-digraph: one arc ``left(e) -> right(e)`` per primal edge, merged."""
    if faces is None:
        faces = trace_faces(g)
    arcs = sorted(set(zip(faces.edge_left, faces.edge_right)))
    return DualGraph(len(faces.faces), tuple(arcs), faces.s_star, faces.t_star)


def order_dual(d: DualGraph) -> list[int]:
    """Topological order of the dual; ties go to the smallest face id."""
    succ, indeg = _dual_adjacency(d.face_count, d.edges)
    heap = [f for f in range(d.face_count) if indeg[f] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        f = heapq.heappop(heap)
        order.append(f)
        for h in succ[f]:
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(heap, h)
    return _checked_order(order, d.face_count, d.s_star, d.t_star)


def face_order(faces: FaceStructure) -> list[int]:
    """Some topological order of the dual, in linear time.

    Works on the raw per-edge arcs (repeats are harmless) and breaks ties
    first-in first-out, so it may differ from :func:`order_dual`.
    """
    count = len(faces.faces)
    succ, indeg = _dual_adjacency(count, zip(faces.edge_left, faces.edge_right))
    queue = deque(f for f in range(count) if indeg[f] == 0)
    order = []
    while queue:
        f = queue.popleft()
        order.append(f)
        for h in succ[f]:
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    return _checked_order(order, count, faces.s_star, faces.t_star)


def _dual_adjacency(count: int, arcs) -> tuple[list[list[int]], list[int]]:
    succ: list[list[int]] = [[] for _ in range(count)]
    indeg = [0] * count
    for a, b in arcs:
        succ[a].append(b)
        indeg[b] += 1
    return succ, indeg


def _checked_order(order: list[int], count: int, s_star: int, t_star: int) -> list[int]:
    if len(order) != count or order[0] != s_star or order[-1] != t_star:
        raise NotPlanarEmbedding("dual graph is not an st-digraph")
    return order


def mirror(g: EmbeddedDigraph) -> EmbeddedDigraph:
    """Left-right reflection: every rotation reversed."""
    out_rot = tuple(tuple(reversed(r)) for r in g.out_rot)
    in_rot = tuple(tuple(reversed(r)) for r in g.in_rot)
    if isinstance(g, EmbeddedStDigraph):
        return EmbeddedStDigraph(g.n, g.edges, out_rot, in_rot, s=g.s, t=g.t)
    return EmbeddedDigraph(g.n, g.edges, out_rot, in_rot)


def reachability(g: EmbeddedDigraph) -> list[int]:
    """Descendant bitsets (a vertex is not its own descendant)."""
    desc = g._cache.get("desc")
    if desc is None:
        desc = [0] * g.n
        for v in reversed(topological_order(g)):
            bits = 0
            for e in g.out_rot[v]:
                w = g.edges[e][1]
                bits |= desc[w] | (1 << w)
            desc[v] = bits
        g._cache["desc"] = desc
    return desc


def from_adjacency(
    n: int,
    edges: Sequence[tuple[int, int]],
    out_order: dict[int, Sequence[int]] | None = None,
    in_order: dict[int, Sequence[int]] | None = None,
) -> EmbeddedDigraph:
    """Build a graph from edges and partial rotations given as neighbour lists.

    Vertices missing from ``out_order``/``in_order`` must have at most one
    edge of that direction.
    """
    index = {tuple(uv): e for e, uv in enumerate(edges)}
    outs: list[list[int]] = [[] for _ in range(n)]
    ins: list[list[int]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(edges):
        outs[u].append(e)
        ins[v].append(e)
    for v, nbrs in (out_order or {}).items():
        outs[v] = [index[(v, w)] for w in nbrs]
    for v, nbrs in (in_order or {}).items():
        ins[v] = [index[(u, v)] for u in nbrs]
    for v in range(n):
        if len(outs[v]) > 1 and v not in (out_order or {}):
            raise RotationMismatch(f"out-rotation of {v} is ambiguous")
        if len(ins[v]) > 1 and v not in (in_order or {}):
            raise RotationMismatch(f"in-rotation of {v} is ambiguous")
    return build_graph(n, edges, outs, ins)
