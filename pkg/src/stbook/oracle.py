"""Exhaustive ground truth for small instances.

Enumerates precedence-respecting vertex orders directly, allowing a step
from ``u`` to ``x`` only when ``(u, x)`` is an edge or the two vertices sit
on opposite borders of one inner face.  Co-faciality is read straight off
the face border lists, independently of the setup-cost machinery.
"""

from __future__ import annotations

from typing import Iterator

from .completion import Completion, CompletionEdge
from .errors import TooLarge
from .graph import EmbeddedStDigraph, check_st, trace_faces

EXISTS_LIMIT = 12
COUNT_LIMIT = 10


def _host_table(g: EmbeddedStDigraph) -> dict[tuple[int, int], int]:
    table = {}
    for f in trace_faces(g).inner_faces():
        for u in f.left[1:-1]:
            for v in f.right[1:-1]:
                table[(u, v)] = f.id
                table[(v, u)] = f.id
    return table


def _orders(g: EmbeddedStDigraph) -> Iterator[list[int]]:
    n = g.n
    edges = set(g.edges)
    hosts = _host_table(g)
    preds = [0] * n
    for u, v in g.edges:
        preds[v] |= 1 << u
    full = (1 << n) - 1
    seq: list[int] = []

    def rec(done: int) -> Iterator[list[int]]:
        if done == full:
            yield list(seq)
            return
        last = seq[-1] if seq else None
        for x in range(n):
            if done >> x & 1 or preds[x] & ~done:
                continue
            if last is not None and (last, x) not in edges and (last, x) not in hosts:
                continue
            seq.append(x)
            yield from rec(done | 1 << x)
            seq.pop()

    yield from rec(0)


def _to_completion(g: EmbeddedStDigraph, order: list[int]) -> Completion:
    hosts = _host_table(g)
    edges = tuple(
        CompletionEdge(a, b, hosts[(a, b)]) for a, b in zip(order, order[1:]) if not g.has_edge(a, b)
    )
    return Completion(edges, tuple(order))


def oracle_exists(g: EmbeddedStDigraph) -> Completion | None:
    """Lexicographically first witness, or None."""
    g = check_st(g)
    if g.n > EXISTS_LIMIT:
        raise TooLarge(f"oracle is limited to {EXISTS_LIMIT} vertices, got {g.n}")
    for order in _orders(g):
        return _to_completion(g, order)
    return None


def oracle_all(g: EmbeddedStDigraph) -> Iterator[Completion]:
    g = check_st(g)
    if g.n > EXISTS_LIMIT:
        raise TooLarge(f"oracle is limited to {EXISTS_LIMIT} vertices, got {g.n}")
    for order in _orders(g):
        yield _to_completion(g, order)


def oracle_count(g: EmbeddedStDigraph) -> int:
    g = check_st(g)
    if g.n > COUNT_LIMIT:
        raise TooLarge(f"counting is limited to {COUNT_LIMIT} vertices, got {g.n}")
    return sum(1 for _ in _orders(g))
