"""Completion sets: validation, the induced Hamiltonian path, and reduction
to at most two completion edges per face."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import CyclicCompletion, InternalInvariantBroken, InvalidInput, NotHamiltonian
from .graph import EmbeddedStDigraph, FaceStructure, check_st, trace_faces


class CompletionEdge(NamedTuple):
    tail: int
    head: int
    face: int


class Completion(NamedTuple):
    """A completion set together with the Hamiltonian path it induces."""

    edges: tuple[CompletionEdge, ...]
    path: tuple[int, ...]


@dataclass
class ValidationReport:
    ok: bool = True
    failures: list[tuple[str, object]] = field(default_factory=list)

    def fail(self, check: str, witness: object) -> None:
        self.ok = False
        self.failures.append((check, witness))

    def __str__(self) -> str:
        if self.ok:
            return "ok"
        return "\n".join(f"{name}: {witness}" for name, witness in self.failures)


def _pairs(S: Iterable) -> list[tuple[int, int]]:
    return [(int(e[0]), int(e[1])) for e in S]


def induced_path(g: EmbeddedStDigraph, S: Iterable) -> list[int]:
    """The Hamiltonian path of ``G + S``: its topological order, if unique."""
    n = g.n
    succ: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    for u, v in list(g.edges) + _pairs(S):
        succ[u].append(v)
        indeg[v] += 1
    ready = [v for v in range(n) if indeg[v] == 0]
    order = []
    ambiguous = None
    while ready:
        if len(ready) > 1 and ambiguous is None:
            ambiguous = tuple(sorted(ready))
        u = ready.pop()
        order.append(u)
        for v in succ[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                ready.append(v)
    if len(order) != n:
        raise CyclicCompletion("G plus the completion set contains a cycle")
    if ambiguous is not None:
        raise NotHamiltonian(f"vertices {ambiguous} are mutually unordered")
    adjacent = set(g.edges) | set(_pairs(S))
    for a, b in zip(order, order[1:]):
        if (a, b) not in adjacent:
            raise NotHamiltonian(f"consecutive vertices {a},{b} are not adjacent")
    return order


def _crossing(pos: dict[int, int], e1: CompletionEdge, e2: CompletionEdge) -> bool:
    a, b = sorted((pos[e1.tail], pos[e1.head]))
    c, d = pos[e2.tail], pos[e2.head]
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b) != (a < d < b)


def _side(fs: FaceStructure, fid: int, v: int) -> str | None:
    if fs.face_right_of[v] == fid:
        return "left"
    if fs.face_left_of[v] == fid:
        return "right"
    return None


def validate_completion(g: EmbeddedStDigraph, S: Iterable[CompletionEdge]) -> ValidationReport:
    g = check_st(g)
    fs = trace_faces(g)
    S = [CompletionEdge(*e) for e in S]
    report = ValidationReport()

    seen = set()
    for e in S:
        if (e.tail, e.head) in seen:
            report.fail("duplicate-edge", e)
        seen.add((e.tail, e.head))
        if g.has_edge(e.tail, e.head):
            report.fail("edge-hosting", (e, "already an edge of G"))
            continue
        if not fs.is_inner(e.face):
            report.fail("edge-hosting", (e, "host is not an inner face"))
            continue
        st, sh = _side(fs, e.face, e.tail), _side(fs, e.face, e.head)
        if st is None or sh is None or st == sh:
            report.fail("edge-hosting", (e, "endpoints not on opposite border interiors"))

    path = None
    try:
        path = induced_path(g, S)
    except CyclicCompletion as exc:
        report.fail("acyclicity", str(exc))
    except NotHamiltonian as exc:
        report.fail("unique-topological-order", str(exc))
    if path is not None and (path[0] != g.s or path[-1] != g.t):
        report.fail("path-endpoint", (path[0], path[-1]))

    by_face: dict[int, list[CompletionEdge]] = defaultdict(list)
    for e in S:
        if fs.is_inner(e.face):
            by_face[e.face].append(e)
    for fid, group in by_face.items():
        if len(group) < 2:
            continue
        pos = {v: i for i, v in enumerate(fs.faces[fid].boundary_cycle())}
        if any(v not in pos for e in group for v in (e.tail, e.head)):
            continue
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                if _crossing(pos, group[i], group[j]):
                    report.fail("non-crossing", (group[i], group[j]))
    return report


def _edges_by_face(S, pos) -> dict[int, list[CompletionEdge]]:
    by_face: dict[int, list[CompletionEdge]] = defaultdict(list)
    for e in sorted(S, key=lambda e: pos[e.tail]):
        by_face[e.face].append(e)
    return by_face


def check_face_shape(g: EmbeddedStDigraph, S: Iterable[CompletionEdge]) -> ValidationReport:
    """Per-face shape of a valid completion set, in path-traversal order.

    Consecutive edges in a face alternate orientation, the first one lands
    on the lowest non-source vertex of its side, the last one leaves the
    highest non-sink vertex of its side, and the origin of one edge is
    joined by an edge of G to the destination of the next.
    """
    g = check_st(g)
    fs = trace_faces(g)
    S = [CompletionEdge(*e) for e in S]
    pos = {v: i for i, v in enumerate(induced_path(g, S))}
    report = ValidationReport()
    for fid, group in sorted(_edges_by_face(S, pos).items()):
        face = fs.faces[fid]
        orient = ["LR" if _side(fs, fid, e.tail) == "left" else "RL" for e in group]
        for i in range(len(group) - 1):
            if orient[i] == orient[i + 1]:
                report.fail("alternation", (fid, group[i], group[i + 1]))
            if not g.has_edge(group[i].tail, group[i + 1].head):
                report.fail("single-edge-join", (fid, group[i], group[i + 1]))
        first, last = group[0], group[-1]
        lowest = face.right[1] if orient[0] == "LR" else face.left[1]
        if first.head != lowest:
            report.fail("first-destination", (fid, first, lowest))
        highest = face.left[-2] if orient[-1] == "LR" else face.right[-2]
        if last.tail != highest:
            report.fail("last-origin", (fid, last, highest))
    return report


check_lemma2 = check_face_shape  # name used by the operation table


def per_face_counts(S: Iterable[CompletionEdge]) -> dict[int, int]:
    counts: dict[int, int] = defaultdict(int)
    for e in S:
        counts[CompletionEdge(*e).face] += 1
    return dict(counts)


def normalize(g: EmbeddedStDigraph, S: Iterable[CompletionEdge]) -> Completion:
    """Rewrite ``S`` so that no face hosts more than two completion edges.

    The three lowest edges of an overloaded face, ``(x1,y1)``, ``(x2,y2)``,
    ``(x3,y3)`` in path order, cut the path into P1 P2 P3 P4; they are
    replaced by the single edge ``(x3, y1)`` and the path becomes
    P1 P3 P2 P4.  Each round is re-validated.
    """
    g = check_st(g)
    S = [CompletionEdge(*e) for e in S]
    report = validate_completion(g, S)
    if not report.ok:
        raise InvalidInput(f"completion set is not valid:\n{report}")
    path = induced_path(g, S)

    while True:
        pos = {v: i for i, v in enumerate(path)}
        overloaded = [(fid, grp) for fid, grp in sorted(_edges_by_face(S, pos).items()) if len(grp) >= 3]
        if not overloaded:
            break
        fid, grp = overloaded[0]
        e1, e2, e3 = grp[:3]
        p1 = path[: pos[e1.tail] + 1]
        p2 = path[pos[e1.head] : pos[e2.tail] + 1]
        p3 = path[pos[e2.head] : pos[e3.tail] + 1]
        p4 = path[pos[e3.head] :]
        new_path = p1 + p3 + p2 + p4
        replaced = {e1, e2, e3}
        new_edge = CompletionEdge(e3.tail, e1.head, fid)
        new_S = [e for e in S if e not in replaced] + [new_edge]

        expected = {(a, b) for a, b in zip(new_path, new_path[1:]) if not g.has_edge(a, b)}
        if expected != {(e.tail, e.head) for e in new_S}:
            raise InternalInvariantBroken("rewired path does not match the rewired completion set")
        if not validate_completion(g, new_S).ok or induced_path(g, new_S) != new_path:
            raise InternalInvariantBroken("rewired completion set failed validation")
        S, path = new_S, new_path

    pos = {v: i for i, v in enumerate(path)}
    S.sort(key=lambda e: pos[e.tail])
    return Completion(tuple(S), tuple(path))


def completion_from_path(g: EmbeddedStDigraph, path: Iterable[int], fs: FaceStructure | None = None):
    """Completion edges for consecutive non-adjacent path vertices, or None if one has no host."""
    g = check_st(g)
    if fs is None:
        fs = trace_faces(g)
    out = []
    path = list(path)
    for a, b in zip(path, path[1:]):
        if g.has_edge(a, b):
            continue
        f = fs.opposite_face(a, b)
        if f is None:
            return None
        out.append(CompletionEdge(a, b, f))
    return Completion(tuple(out), tuple(path))
