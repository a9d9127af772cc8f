"""Random embedded planar st-digraphs, grown face by face.

Growth starts from a single directed path (the future left border).  Each
step picks two vertices ``u`` before ``w`` on the current right border and
attaches a new directed path from ``u`` to ``w`` on the right (or a bare
transitive edge ``(u, w)``); the new path becomes part of the right
border.  Every attachment creates one face, so the result is always a
valid upward embedding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GenerationExhausted, InputError
from .graph import EmbeddedDigraph, EmbeddedStDigraph, build_graph, check_st, trace_faces


@dataclass(frozen=True)
class GenConfig:
    """``density`` is the share of the vertices (beyond s and t) placed by
    face attachments rather than on the initial path; ``transitive`` is the
    per-step chance of adding a transitive edge instead of new vertices."""

    n: int
    density: float = 0.6
    transitive: float = 0.15
    seed: int = 0
    max_chunk: int = 3
    max_span: int = 3

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need at least two vertices")
        if not (0.0 <= self.density <= 1.0 and 0.0 <= self.transitive <= 1.0):
            raise ValueError("density and transitive must lie in [0, 1]")


class StBuilder:
    """Incremental construction; the right border is a linked list."""

    def __init__(self, path_len: int, nfree: bool = False):
        if path_len < 2:
            raise ValueError("initial path needs two vertices")
        self.n = path_len
        self.nfree = nfree
        self.edges: list[tuple[int, int]] = []
        self.out_rot: list[list[int]] = [[] for _ in range(path_len)]
        self.in_rot: list[list[int]] = [[] for _ in range(path_len)]
        # vertex has an out-edge that is not the leftmost in-edge of its head
        self.bad = [False] * path_len
        self.nxt: dict[int, int] = {}
        self.prv: dict[int, int] = {}
        # border vertices except t that may take a new rightmost out-edge
        self.pool: list[int] = []
        self.pool_pos: dict[int, int] = {}
        for v in range(path_len - 1):
            self._add_edge(v, v + 1)
            self.nxt[v] = v + 1
            self.prv[v + 1] = v
            self._pool_add(v)
        self.s = 0
        self.t = path_len - 1

    def _pool_add(self, v: int) -> None:
        self.pool_pos[v] = len(self.pool)
        self.pool.append(v)

    def _pool_remove(self, v: int) -> None:
        i = self.pool_pos.pop(v, None)
        if i is None:
            return
        last = self.pool.pop()
        if last != v:
            self.pool[i] = last
            self.pool_pos[last] = i

    def _new_vertex(self) -> int:
        v = self.n
        self.n += 1
        self.out_rot.append([])
        self.in_rot.append([])
        self.bad.append(False)
        return v

    def _add_edge(self, u: int, v: int) -> None:
        e = len(self.edges)
        self.edges.append((u, v))
        self.out_rot[u].append(e)
        if self.in_rot[v]:
            self.bad[u] = True
            if self.nfree:
                self._pool_remove(u)
        self.in_rot[v].append(e)

    def border(self) -> list[int]:
        out = [self.s]
        while out[-1] != self.t:
            out.append(self.nxt[out[-1]])
        return out

    def creates_n(self, u: int) -> bool:
        """Whether a new rightmost out-edge at ``u`` would complete an embedded N."""
        return self.bad[u]

    def transitive_ok(self, u: int, w: int) -> bool:
        if self.nxt[u] == w or any(self.edges[e][1] == w for e in self.out_rot[u]):
            return False
        if not self.nfree:
            return True
        # u turns ineligible and the covered vertices leave the border;
        # keep at least one eligible vertex
        lost = 1
        x = self.nxt[u]
        while x != w:
            lost += x in self.pool_pos
            x = self.nxt[x]
        return len(self.pool) > lost

    def attach(self, u: int, w: int, r: int) -> list[int]:
        """Attach a path with ``r`` new vertices from ``u`` to ``w`` (both on the right border)."""
        between = []
        x = self.nxt[u]
        while x != w:
            between.append(x)
            x = self.nxt[x]
        if r == 0 and not between:
            raise ValueError("a transitive edge needs a vertex between its ends")
        new = [self._new_vertex() for _ in range(r)]
        chain = [u] + new + [w]
        for a, b in zip(chain, chain[1:]):
            self._add_edge(a, b)
        for x in between:
            self._pool_remove(x)
            del self.nxt[x]
            del self.prv[x]
        for a, b in zip(chain, chain[1:]):
            self.nxt[a] = b
            self.prv[b] = a
        for x in new:
            if not (self.nfree and self.bad[x]):
                self._pool_add(x)
        return new

    def graph(self) -> EmbeddedDigraph:
        return build_graph(self.n, self.edges, self.out_rot, self.in_rot)

    def build(self) -> EmbeddedStDigraph:
        return check_st(self.graph())


def _grow(cfg: GenConfig, nfree: bool) -> EmbeddedStDigraph:
    rng = random.Random(cfg.seed)
    n = cfg.n
    attached = round(cfg.density * (n - 2))
    b = StBuilder(max(2, n - attached), nfree=nfree)
    extra_edges = 0
    failures = 0
    while b.n < n or (failures == 0 and extra_edges == 0 and rng.random() < cfg.transitive and n > 3):
        if failures > 1000:
            raise GenerationExhausted("no admissible attachment found")
        u = b.pool[rng.randrange(len(b.pool))]
        span = rng.randint(1, cfg.max_span)
        w = u
        for _ in range(span):
            if w == b.t:
                break
            w = b.nxt[w]
        transitive = rng.random() < cfg.transitive and extra_edges < n
        if transitive and b.transitive_ok(u, w):
            b.attach(u, w, 0)
            extra_edges += 1
        elif transitive and b.n >= n:
            failures += 1
            continue
        else:
            if b.n >= n:
                break
            r = rng.randint(1, min(cfg.max_chunk, n - b.n))
            b.attach(u, w, r)
        failures = 0
    return b.build()


def gen_random_st(cfg: GenConfig) -> EmbeddedStDigraph:
    return _grow(cfg, nfree=False)


def gen_random_nfree(cfg: GenConfig) -> EmbeddedStDigraph:
    """Like :func:`gen_random_st`, but attachments only start at vertices
    where a new rightmost out-edge cannot complete an embedded N."""
    return _grow(cfg, nfree=True)


def gen_ladder_width2(n: int, seed: int = 0, rung_prob: float = 0.5) -> EmbeddedStDigraph:
    """Two chains between s and t joined by non-crossing rungs in either direction.

    Width is 2 as long as at least one pair of chain vertices stays
    incomparable.
    """
    if n < 4:
        raise ValueError("need at least four vertices")
    rng = random.Random(seed)
    inner = n - 2
    p = inner // 2
    q = inner - p
    s, t = 0, n - 1
    left = list(range(1, 1 + p))
    right = list(range(1 + p, 1 + p + q))
    edges = [(s, left[0]), (s, right[0])]
    edges += list(zip(left, left[1:])) + list(zip(right, right[1:]))
    edges += [(left[-1], t), (right[-1], t)]
    rungs = []
    i = j = 0
    while i < p and j < q:
        if rng.random() < rung_prob:
            if rng.random() < 0.5:
                rungs.append((left[i], right[j]))
            else:
                rungs.append((right[j], left[i]))
            i += 1
            j += 1
        if rng.random() < 0.5:
            i += rng.randint(0, 2)
        else:
            j += rng.randint(0, 2)
    edges += rungs
    eid = {uv: k for k, uv in enumerate(edges)}
    out_rot: list[list[int]] = [[] for _ in range(n)]
    in_rot: list[list[int]] = [[] for _ in range(n)]
    out_rot[s] = [eid[(s, left[0])], eid[(s, right[0])]]
    in_rot[t] = [eid[(left[-1], t)], eid[(right[-1], t)]]
    for k, v in enumerate(left):
        up = eid[(v, left[k + 1])] if k + 1 < p else eid[(v, t)]
        down = eid[(left[k - 1], v)] if k > 0 else eid[(s, v)]
        out_rot[v] = [up] + [eid[r] for r in rungs if r[0] == v]
        in_rot[v] = [down] + [eid[r] for r in rungs if r[1] == v]
    for k, v in enumerate(right):
        up = eid[(v, right[k + 1])] if k + 1 < q else eid[(v, t)]
        down = eid[(right[k - 1], v)] if k > 0 else eid[(s, v)]
        out_rot[v] = [eid[r] for r in rungs if r[0] == v] + [up]
        in_rot[v] = [eid[r] for r in rungs if r[1] == v] + [down]
    return check_st(build_graph(n, edges, out_rot, in_rot))


def delete_vertices(g: EmbeddedDigraph, doomed) -> EmbeddedDigraph:
    """Induced sub-embedding on the remaining vertices (ids compacted in order)."""
    doomed = set(doomed)
    keep = [v for v in range(g.n) if v not in doomed]
    new_id = {v: i for i, v in enumerate(keep)}
    edge_map = {}
    edges = []
    for e, (u, v) in enumerate(g.edges):
        if u in new_id and v in new_id:
            edge_map[e] = len(edges)
            edges.append((new_id[u], new_id[v]))
    out_rot = [[edge_map[e] for e in g.out_rot[v] if e in edge_map] for v in keep]
    in_rot = [[edge_map[e] for e in g.in_rot[v] if e in edge_map] for v in keep]
    return build_graph(len(keep), edges, out_rot, in_rot)


def gen_multi_terminal_nfree(cfg: GenConfig, max_tries: int = 50) -> EmbeddedDigraph:
    """N-free upward planar digraph with several sources or sinks.

    Made from an N-free st-digraph by deleting a few vertices of its outer
    boundary; deletions that disconnect the graph are retried.
    """
    rng = random.Random(cfg.seed * 7919 + 1)
    for attempt in range(max_tries):
        g = gen_random_nfree(GenConfig(cfg.n, cfg.density, cfg.transitive, cfg.seed + attempt * 100003))
        fs = trace_faces(g)
        boundary = sorted(set(fs.faces[fs.s_star].right) | set(fs.faces[fs.t_star].left))
        k = rng.randint(1, min(3, max(1, len(boundary) - 3)))
        doomed = set(rng.sample(boundary, k))
        if rng.random() < 0.7:
            doomed |= {g.s, g.t} if rng.random() < 0.5 else {rng.choice([g.s, g.t])}
        if g.n - len(doomed) < 3:
            continue
        try:
            h = delete_vertices(g, doomed)
        except InputError:  # disconnected leftovers
            continue
        if len(h.sources()) > 1 or len(h.sinks()) > 1:
            return h
    raise GenerationExhausted("could not produce a multi-terminal instance")
