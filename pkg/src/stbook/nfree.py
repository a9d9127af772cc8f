"""Linear-time completion for embedded N-free (and H-free) planar st-digraphs.

Faces are added in dual topological order.  The path starts as the left
border of the graph; each face with new right-border vertices is spliced
in by cutting the path at the face's bottom-left edge ``(s_k, v)``,
walking up the new border and jumping back to ``v`` with one completion
edge.  N-freeness guarantees the bottom-left edge of every face is still
on the path when the face comes up.
"""

from __future__ import annotations

from dataclasses import dataclass

from .completion import Completion, CompletionEdge
from .errors import ContainsEmbeddedH, ContainsEmbeddedN, InternalInvariantBroken
from .graph import EmbeddedStDigraph, check_st, face_order, mirror, trace_faces
from .patterns import find_embedded_H, find_embedded_N


def complete_nfree(g: EmbeddedStDigraph) -> Completion:
    g = check_st(g)
    occ = find_embedded_N(g)
    if occ is not None:
        raise ContainsEmbeddedN(occ)
    fs = trace_faces(g)
    order = face_order(fs)

    succ = [-1] * g.n
    first = fs.faces[fs.s_star].right
    for a, b in zip(first, first[1:]):
        succ[a] = b

    added: list[CompletionEdge | None] = [None] * g.n  # indexed by tail
    for fid in order[1:-1]:
        face = fs.faces[fid]
        sk, v = face.left[0], face.left[1]
        if succ[sk] != v:
            raise InternalInvariantBroken(f"bottom-left edge ({sk},{v}) of face {fid} is off the path")
        new = face.right[1:-1]
        if not new:
            continue
        prev = sk
        for x in new:
            succ[prev] = x
            prev = x
        succ[prev] = v
        if v != face.sink:
            added[prev] = CompletionEdge(prev, v, fid)

    path = [g.s]
    while succ[path[-1]] >= 0:
        path.append(succ[path[-1]])
    if len(path) != g.n or path[-1] != g.t:
        raise InternalInvariantBroken("constructed path does not cover the graph")
    edges = tuple(added[x] for x in path if added[x] is not None)
    return Completion(edges, tuple(path))


def complete_hfree(g: EmbeddedStDigraph) -> Completion:
    """Mirror image of :func:`complete_nfree` on the reflected graph."""
    g = check_st(g)
    occ = find_embedded_H(g)
    if occ is not None:
        raise ContainsEmbeddedH(occ)
    mirrored = complete_nfree(mirror(g))
    fs = trace_faces(g)
    edges = []
    for e in mirrored.edges:
        f = fs.opposite_face(e.tail, e.head)
        if f is None:
            raise InternalInvariantBroken(f"mirrored completion edge {e} has no host face")
        edges.append(CompletionEdge(e.tail, e.head, f))
    return Completion(tuple(edges), mirrored.path)


@dataclass(frozen=True)
class AutoResult:
    status: str  # "yes" or "no"
    method: str
    completion: Completion | None


def complete_auto(g: EmbeddedStDigraph, width_cap: int = 6) -> AutoResult:
    """N-free construction, then H-free, then the bounded-width decision."""
    from .mss import mss_decide

    g = check_st(g)
    if find_embedded_N(g) is None:
        return AutoResult("yes", "nfree", complete_nfree(g))
    if find_embedded_H(g) is None:
        return AutoResult("yes", "hfree", complete_hfree(g))
    found = mss_decide(g, width_cap=width_cap)
    if found is None:
        return AutoResult("no", "mss", None)
    return AutoResult("yes", "mss", found)
