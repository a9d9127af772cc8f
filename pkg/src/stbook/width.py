"""Poset width of the reachability order and a matching Dilworth chain cover."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import TooLarge
from .graph import EmbeddedDigraph, reachability, topological_order


@dataclass(frozen=True)
class WidthInfo:
    width: int
    chains: tuple[tuple[int, ...], ...]
    antichain: tuple[int, ...]


def _bits(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _hopcroft_karp(n: int, adj: list[list[int]]) -> tuple[list[int], list[int]]:
    """Maximum matching in the split graph ``left v -> right w``."""
    INF = n + 1
    match_l = [-1] * n
    match_r = [-1] * n
    dist = [0] * n

    def bfs() -> bool:
        queue = deque()
        for v in range(n):
            if match_l[v] < 0:
                dist[v] = 0
                queue.append(v)
            else:
                dist[v] = INF
        found = False
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                u = match_r[w]
                if u < 0:
                    found = True
                elif dist[u] == INF:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        return found

    def dfs(root: int) -> bool:
        # iterative augmenting-path search along the BFS layering
        stack = [(root, iter(adj[root]))]
        path = []
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                u = match_r[w]
                if u < 0:
                    path.append((v, w))
                    for a, b in path:
                        match_l[a] = b
                        match_r[b] = a
                    return True
                if dist[u] == dist[v] + 1:
                    path.append((v, w))
                    stack.append((u, iter(adj[u])))
                    advanced = True
                    break
            if not advanced:
                dist[v] = INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for v in range(n):
            if match_l[v] < 0:
                dfs(v)
    return match_l, match_r


def chain_cover(n: int, desc: list[int]) -> WidthInfo:
    """Minimum chain cover of the order given by descendant bitsets."""
    adj = [_bits(desc[v]) for v in range(n)]
    match_l, match_r = _hopcroft_karp(n, adj)

    chains = []
    for v in range(n):
        if match_r[v] < 0:
            chain = [v]
            while match_l[chain[-1]] >= 0:
                chain.append(match_l[chain[-1]])
            chains.append(tuple(chain))
    chains.sort()

    # Koenig: alternating reachability from free left vertices
    z_left = [False] * n
    z_right = [False] * n
    queue = deque(v for v in range(n) if match_l[v] < 0)
    for v in queue:
        z_left[v] = True
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if not z_right[w] and match_l[v] != w:
                z_right[w] = True
                u = match_r[w]
                if u >= 0 and not z_left[u]:
                    z_left[u] = True
                    queue.append(u)
    antichain = tuple(v for v in range(n) if z_left[v] and not z_right[v])
    return WidthInfo(len(chains), tuple(chains), antichain)


def poset_width(g: EmbeddedDigraph) -> WidthInfo:
    info = g._cache.get("width")
    if info is None:
        info = chain_cover(g.n, reachability(g))
        g._cache["width"] = info
    return info


def edge_independence_number(g: EmbeddedDigraph, limit: int = 40) -> int:
    """Largest vertex set spanning no edge of ``g`` (edges taken undirected).

    This is the literal reading of "independent"; it differs from the poset
    width whenever transitive pairs are involved.
    """
    if g.n > limit:
        raise TooLarge(f"exact independence number is limited to {limit} vertices")
    nbr = [0] * g.n
    for u, v in g.edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u

    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + bin(cand).count("1") <= best:
            return
        if not cand:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        grow(cand & ~nbr[v] & ~(1 << v), size + 1)
        grow(cand & ~(1 << v), size)

    grow((1 << g.n) - 1, 0)
    return best


def brute_force_width(g: EmbeddedDigraph) -> int:
    """Largest antichain by exhaustive search; for cross-checking small graphs."""
    desc = reachability(g)
    verts = topological_order(g)
    best = 1 if g.n else 0
    for r in range(2, g.n + 1):
        ok = False
        for combo in combinations(verts, r):
            if all(not (desc[a] >> b) & 1 and not (desc[b] >> a) & 1 for a, b in combinations(combo, 2)):
                ok = True
                break
        if not ok:
            break
        best = r
    return best
