import random

import numpy as np
import pytest
from conftest import linear_extensions, random_st
from hypothesis import given
from hypothesis import strategies as st

from stbook.completion import CompletionEdge, induced_path, validate_completion
from stbook.errors import WidthCapExceeded
from stbook.fixtures import diamond, ladder3, path3
from stbook.generate import gen_ladder_width2
from stbook.graph import trace_faces
from stbook.mss import (
    extract_completion,
    min_setup_schedule,
    mss_decide,
    mss_min_cost,
    setup_costs,
    zero_cost_schedule,
)
from stbook.oracle import oracle_exists
from stbook.width import poset_width


def zeros(g):
    return setup_costs(g).zero_pairs()


def test_setup_costs_examples():
    assert zeros(path3()) == {(0, 1), (1, 2)}
    assert zeros(diamond()) == {(0, 1), (0, 2), (1, 3), (2, 3), (1, 2), (2, 1)}
    g = ladder3()
    cross = {(a, b) for a in (1, 2, 3) for b in (4, 5, 6)}
    cross |= {(b, a) for a, b in cross}
    assert len(cross) == 18
    assert zeros(g) == set(g.edges) | cross


def test_min_cost_examples():
    r = mss_min_cost(path3(), setup_costs(path3()))
    assert (r.total_cost, r.schedule) == (0, (0, 1, 2))
    g = diamond()
    r = mss_min_cost(g, setup_costs(g))
    assert (r.total_cost, r.schedule) == (0, (0, 1, 2, 3))
    C = setup_costs(g).to_dense()
    C[1, 2] = C[2, 1] = 1
    assert mss_min_cost(g, C).total_cost == 1


def test_decide_examples():
    out = mss_decide(diamond())
    assert out.edges == (CompletionEdge(1, 2, 0),)
    assert out.path == (0, 1, 2, 3)
    assert mss_decide(path3()).edges == ()


def test_extract_examples():
    fs = trace_faces(diamond())
    assert extract_completion(diamond(), fs, [0, 1, 2, 3]) == (CompletionEdge(1, 2, 0),)
    assert extract_completion(path3(), trace_faces(path3()), [0, 1, 2]) == ()
    assert extract_completion(ladder3(), trace_faces(ladder3()), range(8)) == (CompletionEdge(3, 4, 0),)


def test_width_cap():
    g = random_st(0, 8)
    w = poset_width(g).width
    with pytest.raises(WidthCapExceeded):
        mss_decide(g, width_cap=w - 1)


def _brute_min(n, edges, C):
    best = None
    for order in linear_extensions(n, edges):
        cost = sum(C[a][b] for a, b in zip(order, order[1:]))
        if best is None or cost < best[0] or (cost == best[0] and order < best[1]):
            best = (cost, order)
    return best


def _random_dag(rng, n):
    perm = list(range(n))
    rng.shuffle(perm)
    return [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.35]


@given(st.integers(1, 7), st.integers(0, 10**6))
def test_min_setup_matches_brute_force(n, seed):
    rng = random.Random(seed)
    edges = _random_dag(rng, n)
    C = [[rng.randint(0, 4) for _ in range(n)] for _ in range(n)]
    res = min_setup_schedule(n, edges, np.array(C))
    cost, order = _brute_min(n, edges, C)
    assert res.total_cost == cost
    assert list(res.schedule) == order
    assert sum(C[a][b] for a, b in zip(res.schedule, res.schedule[1:])) == res.total_cost


@given(st.integers(1, 6), st.integers(0, 10**6))
def test_raising_an_entry_never_lowers_cost(n, seed):
    rng = random.Random(seed)
    edges = _random_dag(rng, n)
    C = np.array([[rng.randint(0, 3) for _ in range(n)] for _ in range(n)])
    base = min_setup_schedule(n, edges, C).total_cost
    i, j = rng.randrange(n), rng.randrange(n)
    C[i, j] += rng.randint(1, 3)
    assert min_setup_schedule(n, edges, C).total_cost >= base


@given(st.integers(0, 10**6), st.integers(2, 9))
def test_decide_matches_oracle_and_min_cost(seed, n):
    g = random_st(seed, n, transitive=0.4)
    found = mss_decide(g)
    assert (found is None) == (oracle_exists(g) is None)
    C = setup_costs(g)
    full = mss_min_cost(g, C)
    assert full.total_cost >= 0
    assert (full.total_cost == 0) == (found is not None)
    if found is not None:
        assert validate_completion(g, found.edges).ok
        # schedule -> completion -> induced path round trip
        assert tuple(induced_path(g, found.edges)) == found.path
        assert found.path == full.schedule


@given(st.integers(0, 10**6), st.integers(2, 9))
def test_zero_search_states_are_ideals(seed, n):
    g = random_st(seed, n, transitive=0.4)
    info = poset_width(g)
    C = setup_costs(g)
    record = []
    _, expanded = zero_cost_schedule(g.n, g.edges, C.is_zero, info, record=record)
    full = min_setup_schedule(g.n, g.edges, C, info)
    assert expanded <= full.states
    preds = [set() for _ in range(g.n)]
    for u, v in g.edges:
        preds[v].add(u)
    for key in record:
        ideal = {v for c, p in zip(info.chains, key.prefix) for v in c[:p]}
        assert all(preds[v] <= ideal for v in ideal)
        if key.last >= 0:
            last = info.chains[key.last][key.prefix[key.last] - 1]
            assert not any(last in preds[v] for v in ideal)


def test_width_two_ladders_scale():
    for seed in range(5):
        g = gen_ladder_width2(200, seed=seed)
        assert poset_width(g).width <= 2
        stats = {}
        out = mss_decide(g, stats=stats)
        assert stats["expanded"] <= g.n**3
        assert out is None or validate_completion(g, out.edges).ok
