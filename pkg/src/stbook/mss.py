"""Minimum setup scheduling over order ideals of a bounded-width DAG.

A schedule is a linear extension of the precedence order; its cost is the
sum of ``cost(prev, next)`` over consecutive jobs.  States are pairs
(order ideal, chain of the last job), where the ideal is given by how many
elements of each Dilworth chain it contains.  With width ``k`` there are
at most ``prod(len(chain) + 1) * k`` states.

For an embedded planar st-digraph the 0/1 matrix that is zero exactly on
edges and on pairs sitting on opposite border interiors of a common face
turns the existence question for a crossing-free acyclic completion into
"is the minimum setup cost zero".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, NamedTuple, Sequence

import numpy as np

from .completion import Completion, CompletionEdge, validate_completion
from .errors import InternalInvariantBroken, NoHostFace, WidthCapExceeded
from .graph import EmbeddedDigraph, EmbeddedStDigraph, FaceStructure, _topological_order, check_st, trace_faces
from .width import WidthInfo, chain_cover, poset_width

DENSE_LIMIT = 4096


class IdealKey(NamedTuple):
    prefix: tuple[int, ...]
    last: int  # chain holding the most recent job, -1 before the first


@dataclass(frozen=True)
class ScheduleResult:
    total_cost: int
    schedule: tuple[int, ...]
    states: int


class SetupCostMatrix:
    """0/1 setup costs of an embedded planar st-digraph.

    Dense up to ``DENSE_LIMIT`` vertices; above that, entries are answered
    from per-vertex face lookups.
    """

    def __init__(self, g: EmbeddedStDigraph, faces: FaceStructure):
        self.g = g
        self.faces = faces
        self.n = g.n
        self._dense = None
        if self.n <= DENSE_LIMIT:
            mat = np.ones((self.n, self.n), dtype=np.int8)
            for u, v in g.edges:
                mat[u, v] = 0
            for f in faces.inner_faces():
                left = list(f.left[1:-1])
                right = list(f.right[1:-1])
                if left and right:
                    mat[np.ix_(left, right)] = 0
                    mat[np.ix_(right, left)] = 0
            np.fill_diagonal(mat, 1)
            self._dense = mat
            self._rows = mat.tolist()

    def cost(self, i: int, j: int) -> int:
        if self._dense is not None:
            return self._rows[i][j]
        return 0 if self.is_zero(i, j) else 1

    def is_zero(self, i: int, j: int) -> bool:
        if self._dense is not None:
            return self._rows[i][j] == 0
        return self.g.has_edge(i, j) or self.faces.opposite_face(i, j) is not None

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.cost(*ij)

    def to_dense(self) -> np.ndarray:
        if self._dense is not None:
            return self._dense.copy()
        return np.array([[self.cost(i, j) for j in range(self.n)] for i in range(self.n)], dtype=np.int8)

    def zero_pairs(self) -> set[tuple[int, int]]:
        return {(i, j) for i in range(self.n) for j in range(self.n) if i != j and self.is_zero(i, j)}


def setup_costs(g: EmbeddedStDigraph, faces: FaceStructure | None = None) -> SetupCostMatrix:
    g = check_st(g)
    return SetupCostMatrix(g, faces if faces is not None else trace_faces(g))


class _Poset:
    """Chains plus, per job, how many elements of each chain must precede it."""

    def __init__(self, n: int, edges: Sequence[tuple[int, int]], width: WidthInfo | None = None):
        order = _topological_order(n, edges)
        if order is None:
            raise ValueError("precedence graph has a cycle")
        succ: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            succ[u].append(v)
        desc = [0] * n
        for v in reversed(order):
            bits = 0
            for w in succ[v]:
                bits |= desc[w] | (1 << w)
            desc[v] = bits
        if width is None:
            width = chain_cover(n, desc)
        self.n = n
        self.chains = [list(c) for c in width.chains]
        self.k = len(self.chains)
        anc = [0] * n
        for v in range(n):
            bits = desc[v]
            while bits:
                low = bits & -bits
                anc[low.bit_length() - 1] |= 1 << v
                bits ^= low
        masks = []
        for c in self.chains:
            mask = 0
            for v in c:
                mask |= 1 << v
            masks.append(mask)
        self.need = [tuple(bin(anc[v] & masks[j]).count("1") for j in range(self.k)) for v in range(n)]

    def start(self) -> IdealKey:
        return IdealKey((0,) * self.k, -1)

    def moves(self, key: IdealKey) -> list[tuple[int, int]]:
        """(job, chain) pairs that may run next, by increasing job id."""
        prefix = key.prefix
        out = []
        for i, c in enumerate(self.chains):
            p = prefix[i]
            if p < len(c):
                x = c[p]
                need = self.need[x]
                if all(need[j] <= prefix[j] for j in range(self.k)):
                    out.append((x, i))
        out.sort()
        return out

    def last_job(self, key: IdealKey) -> int:
        return -1 if key.last < 0 else self.chains[key.last][key.prefix[key.last] - 1]

    @staticmethod
    def advance(key: IdealKey, chain: int) -> IdealKey:
        prefix = list(key.prefix)
        prefix[chain] += 1
        return IdealKey(tuple(prefix), chain)


def _cost_fn(C) -> Callable[[int, int], int]:
    if isinstance(C, SetupCostMatrix):
        return C.cost
    rows = np.asarray(C).tolist()
    return lambda i, j: rows[i][j]


def min_setup_schedule(n: int, edges: Sequence[tuple[int, int]], C, width: WidthInfo | None = None) -> ScheduleResult:
    """Exact minimum setup cost over all linear extensions; lexicographically
    smallest optimal schedule."""
    poset = _Poset(n, edges, width)
    cost = _cost_fn(C)
    layers = [[poset.start()]]
    for _ in range(n):
        nxt = {}
        for key in layers[-1]:
            for _, chain in poset.moves(key):
                nxt[poset.advance(key, chain)] = None
        layers.append(list(nxt))
    states = sum(len(layer) for layer in layers)

    togo = {key: 0 for key in layers[-1]}
    for layer in reversed(layers[:-1]):
        for key in layer:
            last = poset.last_job(key)
            best = None
            for x, chain in poset.moves(key):
                c = (0 if last < 0 else cost(last, x)) + togo[poset.advance(key, chain)]
                if best is None or c < best:
                    best = c
            togo[key] = best

    key = poset.start()
    schedule = []
    remaining = togo[key]
    while len(schedule) < n:
        last = poset.last_job(key)
        for x, chain in poset.moves(key):
            nk = poset.advance(key, chain)
            step = 0 if last < 0 else cost(last, x)
            if step + togo[nk] == remaining:
                schedule.append(x)
                remaining -= step
                key = nk
                break
        else:
            raise InternalInvariantBroken("optimal schedule reconstruction failed")
    return ScheduleResult(togo[poset.start()], tuple(schedule), states)


def zero_cost_schedule(
    n: int,
    edges: Sequence[tuple[int, int]],
    is_zero: Callable[[int, int], bool],
    width: WidthInfo | None = None,
    record: list | None = None,
) -> tuple[list[int] | None, int]:
    """Lexicographically first schedule whose consecutive pairs all cost zero.

    Depth-first over zero-cost moves only; failed states are remembered.
    Returns the schedule (or None) and the number of expanded states.
    """
    poset = _Poset(n, edges, width)
    start = poset.start()
    seen = {start}
    expanded = 0
    stack = [(start, iter(poset.moves(start)))]
    schedule: list[int] = []
    if record is not None:
        record.append(start)
    while stack:
        key, it = stack[-1]
        if len(schedule) == n:
            return schedule, expanded
        last = poset.last_job(key)
        pushed = False
        for x, chain in it:
            if last >= 0 and not is_zero(last, x):
                continue
            nk = poset.advance(key, chain)
            if nk in seen:
                continue
            seen.add(nk)
            expanded += 1
            if record is not None:
                record.append(nk)
            schedule.append(x)
            stack.append((nk, iter(poset.moves(nk))))
            pushed = True
            break
        if not pushed:
            stack.pop()
            if schedule:
                schedule.pop()
    return None, expanded


def mss_min_cost(g: EmbeddedDigraph, C) -> ScheduleResult:
    info = poset_width(g)
    return min_setup_schedule(g.n, g.edges, C, info)


def extract_completion(g: EmbeddedStDigraph, faces: FaceStructure, schedule: Sequence[int]) -> tuple[CompletionEdge, ...]:
    out = []
    for a, b in zip(schedule, schedule[1:]):
        if g.has_edge(a, b):
            continue
        f = faces.opposite_face(a, b)
        if f is None:
            raise NoHostFace(f"consecutive jobs {a},{b} share no face")
        out.append(CompletionEdge(a, b, f))
    return tuple(out)


def mss_decide(g: EmbeddedStDigraph, width_cap: int = 6, stats: dict | None = None) -> Completion | None:
    """A crossing-free acyclic completion if one exists, else None."""
    g = check_st(g)
    info = poset_width(g)
    if info.width > width_cap:
        raise WidthCapExceeded(info.width, width_cap)
    fs = trace_faces(g)
    C = SetupCostMatrix(g, fs)
    schedule, expanded = zero_cost_schedule(g.n, g.edges, C.is_zero, info)
    if stats is not None:
        stats["expanded"] = expanded
        stats["width"] = info.width
    if schedule is None:
        return None
    edges = extract_completion(g, fs, schedule)
    report = validate_completion(g, edges)
    if not report.ok:
        raise InternalInvariantBroken(f"zero-cost schedule gave an invalid completion:\n{report}")
    return Completion(edges, tuple(schedule))
