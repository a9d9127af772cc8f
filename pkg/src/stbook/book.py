"""Two-page book embeddings read off a completion set.

The Hamiltonian path is the spine.  Completion edges are inserted into the
rotations of their host faces; an edge off the spine then goes on page 1
(left) when it leaves its tail left of the tail's spine edge, else page 2.
The same side must come out at the head, relative to the spine edge
entering it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .completion import CompletionEdge, induced_path
from .errors import InternalInvariantBroken
from .graph import EmbeddedStDigraph, check_st, trace_faces

PAGE_LEFT = 1
PAGE_RIGHT = 2


class BookEdge(NamedTuple):
    tail: int
    head: int
    page: int
    completion: bool


@dataclass(frozen=True)
class BookEmbedding:
    spine: tuple[int, ...]
    edges: tuple[BookEdge, ...]

    def page_of(self, u: int, v: int) -> int:
        for e in self.edges:
            if (e.tail, e.head) == (u, v):
                return e.page
        raise KeyError((u, v))

    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.spine)}


def interleaving_pairs(spine: Sequence[int], edges: Iterable[tuple[int, int]]) -> list[tuple]:
    """All pairs of edges whose spine intervals interleave (quadratic, for checking)."""
    pos = {v: i for i, v in enumerate(spine)}
    iv = [(min(pos[u], pos[v]), max(pos[u], pos[v]), (u, v)) for u, v in edges]
    bad = []
    for i in range(len(iv)):
        a, b, e = iv[i]
        for j in range(i + 1, len(iv)):
            c, d, f = iv[j]
            if a < c < b < d or c < a < d < b:
                bad.append((e, f))
    return bad


def _first_interleaving(intervals: list[tuple[int, int]]) -> tuple | None:
    stack: list[tuple[int, int]] = []
    for lo, hi in sorted(intervals, key=lambda x: (x[0], -x[1])):
        while stack and stack[-1][1] <= lo:
            stack.pop()
        if stack and stack[-1][1] < hi:
            return stack[-1], (lo, hi)
        stack.append((lo, hi))
    return None


def completed_rotations(g: EmbeddedStDigraph, S: Sequence[CompletionEdge]):
    """Edge list and rotations of G plus S, completion edges appended after G's."""
    fs = trace_faces(g)
    edges = list(g.edges)
    out_rot = [list(r) for r in g.out_rot]
    in_rot = [list(r) for r in g.in_rot]
    for c in S:
        e = len(edges)
        edges.append((c.tail, c.head))
        # the host face lies right of its left border and left of its right border
        if fs.face_right_of[c.tail] == c.face:
            out_rot[c.tail].append(e)
        elif fs.face_left_of[c.tail] == c.face:
            out_rot[c.tail].insert(0, e)
        else:
            raise InternalInvariantBroken(f"tail of {tuple(c)} is not on its host face")
        if fs.face_left_of[c.head] == c.face:
            in_rot[c.head].insert(0, e)
        elif fs.face_right_of[c.head] == c.face:
            in_rot[c.head].append(e)
        else:
            raise InternalInvariantBroken(f"head of {tuple(c)} is not on its host face")
    return edges, out_rot, in_rot


def book_embed(g: EmbeddedStDigraph, S: Iterable[CompletionEdge], P: Sequence[int] | None = None) -> BookEmbedding:
    g = check_st(g)
    S = [CompletionEdge(*e) for e in S]
    if P is None:
        P = induced_path(g, S)
    P = tuple(P)
    pos = {v: i for i, v in enumerate(P)}
    edges, out_rot, in_rot = completed_rotations(g, S)
    index = {uv: e for e, uv in enumerate(edges)}

    pages = []
    for e, (u, v) in enumerate(edges):
        i, j = pos[u], pos[v]
        if j == i + 1:
            pages.append(PAGE_LEFT)
            continue
        spine_out = index[(u, P[i + 1])]
        spine_in = index[(P[j - 1], v)]
        at_tail = out_rot[u].index(e) < out_rot[u].index(spine_out)
        at_head = in_rot[v].index(e) < in_rot[v].index(spine_in)
        if at_tail != at_head:
            raise InternalInvariantBroken(f"edge ({u},{v}) gets different sides at its two ends")
        pages.append(PAGE_LEFT if at_tail else PAGE_RIGHT)

    for page in (PAGE_LEFT, PAGE_RIGHT):
        iv = [(pos[u], pos[v]) for (u, v), p in zip(edges, pages) if p == page]
        clash = _first_interleaving(iv)
        if clash is not None:
            a, b = clash
            raise InternalInvariantBroken(
                f"page {page} edges ({P[a[0]]},{P[a[1]]}) and ({P[b[0]]},{P[b[1]]}) interleave"
            )
    m = g.m
    book_edges = tuple(BookEdge(u, v, p, e >= m) for e, ((u, v), p) in enumerate(zip(edges, pages)))
    return BookEmbedding(P, book_edges)


def serialize_book(b: BookEmbedding) -> str:
    out = ["hpcbook 1", "spine " + " ".join(map(str, b.spine))]
    out += [f"bedge {e.tail} {e.head} {e.page} {'s' if e.completion else 'g'}" for e in b.edges]
    return "\n".join(out) + "\n"


def book_to_json(b: BookEmbedding) -> dict:
    return {
        "format": "hpcbook",
        "version": 1,
        "spine": list(b.spine),
        "edges": [{"tail": e.tail, "head": e.head, "page": e.page, "completion": e.completion} for e in b.edges],
    }
