from itertools import combinations

from conftest import random_st
from hypothesis import given
from hypothesis import strategies as st

from stbook.fixtures import diamond, ladder3, parallel3, path3
from stbook.graph import build_graph, check_st
from stbook.width import brute_force_width, chain_cover, edge_independence_number, poset_width


def closure(g):
    """Reachable pairs by plain depth-first search from every vertex."""
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
    reach = set()
    for s in range(g.n):
        stack, seen = [s], set()
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        reach |= {(s, y) for y in seen}
    return reach


def test_fixture_widths():
    assert poset_width(path3()).width == 1
    assert poset_width(path3()).chains == ((0, 1, 2),)
    info = poset_width(diamond())
    assert info.width == 2
    assert sorted(map(sorted, info.chains)) == [[0, 1, 3], [2]]
    assert poset_width(parallel3()).width == 3
    assert sorted(poset_width(parallel3()).antichain) == [1, 2, 3]
    assert poset_width(ladder3()).width == 2


def test_literal_independence_differs_on_transitive_pairs():
    # 0 -> 1 -> 2 plus transitive 0 -> 2: vertices 0 and 2 are comparable
    # but the independence reading only looks at edges
    g = check_st(build_graph(4, [(0, 1), (1, 2), (0, 3), (3, 2)], [[0, 2], [1], [], [3]], [[], [0], [1, 3], [2]]))
    assert poset_width(g).width == 2
    assert edge_independence_number(g) == 2
    g2 = check_st(build_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)], [[0, 3], [1], [2], []], [[], [0], [1], [2, 3]]))
    assert poset_width(g2).width == 1
    assert edge_independence_number(g2) == 2  # {0, 2} spans no edge


@given(st.integers(0, 10**6), st.integers(2, 12))
def test_width_matches_brute_force(seed, n):
    g = random_st(seed, n)
    info = poset_width(g)
    reach = closure(g)
    assert info.width == len(info.chains) == brute_force_width(g)
    assert sorted(v for c in info.chains for v in c) == list(range(g.n))
    for c in info.chains:
        for a, b in zip(c, c[1:]):
            assert (a, b) in reach
    assert len(info.antichain) == info.width
    for a, b in combinations(info.antichain, 2):
        assert (a, b) not in reach and (b, a) not in reach


def test_chain_cover_of_empty_order():
    info = chain_cover(3, [0, 0, 0])
    assert info.width == 3
