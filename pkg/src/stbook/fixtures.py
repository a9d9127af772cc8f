"""Small named graphs used throughout the tests and shipped as sample files."""

from __future__ import annotations

from .graph import EmbeddedDigraph, EmbeddedStDigraph, build_graph, check_st


def _st(n, edges, out_rot=None, in_rot=None) -> EmbeddedStDigraph:
    return check_st(_plain(n, edges, out_rot, in_rot))


def _plain(n, edges, out_rot=None, in_rot=None) -> EmbeddedDigraph:
    outs = [[e for e, (u, _) in enumerate(edges) if u == v] for v in range(n)]
    ins = [[e for e, (_, w) in enumerate(edges) if w == v] for v in range(n)]
    for v, rot in (out_rot or {}).items():
        outs[v] = list(rot)
    for v, rot in (in_rot or {}).items():
        ins[v] = list(rot)
    return build_graph(n, edges, outs, ins)


def path3() -> EmbeddedStDigraph:
    return _st(3, [(0, 1), (1, 2)])


def diamond() -> EmbeddedStDigraph:
    return _st(4, [(0, 1), (0, 2), (1, 3), (2, 3)], {0: [0, 1]}, {3: [2, 3]})


def ladder(k: int) -> EmbeddedStDigraph:
    """Two chains of ``k`` inner vertices: left 1..k, right k+1..2k, s=0, t=2k+1."""
    t = 2 * k + 1
    left = [0] + list(range(1, k + 1)) + [t]
    right = [0] + list(range(k + 1, 2 * k + 1)) + [t]
    edges = list(zip(left, left[1:])) + list(zip(right, right[1:]))
    return _st(2 * k + 2, edges, {0: [0, k + 1]}, {t: [k, 2 * k + 1]})


def ladder3() -> EmbeddedStDigraph:
    return ladder(3)


def ladder5() -> EmbeddedStDigraph:
    return ladder(5)


def nfig() -> EmbeddedDigraph:
    """a=0, b=1, c=2, d=3 with edges (a,b), (c,b), (c,d)."""
    return _plain(4, [(0, 1), (2, 1), (2, 3)], {2: [1, 2]}, {1: [0, 1]})


def parallel3() -> EmbeddedStDigraph:
    edges = [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]
    return _st(5, edges, {0: [0, 1, 2]}, {4: [3, 4, 5]})


def ladder_zigzag(k: int) -> list[tuple[int, int]]:
    """Completion of :func:`ladder` that crosses the single face ``k`` times.

    Starting at left vertex 1 it alternates sides, climbing one level per
    crossing.
    """
    out = []
    for i in range(1, k + 1):
        left, right = i, k + i
        out.append((left, right) if i % 2 == 1 else (right, left))
    return out


FIXTURES = {
    "path3": path3,
    "diamond": diamond,
    "ladder3": ladder3,
    "ladder5": ladder5,
    "nfig": nfig,
    "parallel3": parallel3,
}
