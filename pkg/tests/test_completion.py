import itertools
import math
import random
from types import SimpleNamespace

import pytest
from conftest import random_st
from hypothesis import given
from hypothesis import strategies as st

from stbook.completion import (
    CompletionEdge,
    _crossing,
    check_face_shape,
    induced_path,
    normalize,
    per_face_counts,
    validate_completion,
)
from stbook.errors import CyclicCompletion, InvalidInput, NotHamiltonian
from stbook.fixtures import diamond, ladder, ladder3, ladder_zigzag
from stbook.graph import trace_faces
from stbook.oracle import oracle_all

ZIGZAG3 = [CompletionEdge(1, 4, 0), CompletionEdge(5, 2, 0), CompletionEdge(3, 6, 0)]


def test_induced_path_examples():
    g = diamond()
    assert induced_path(g, [CompletionEdge(2, 1, 0)]) == [0, 2, 1, 3]
    with pytest.raises(NotHamiltonian):
        induced_path(g, [])
    with pytest.raises(CyclicCompletion):
        induced_path(g, [CompletionEdge(2, 1, 0), CompletionEdge(1, 2, 0)])


def _brute_hamiltonian(n, edges):
    adj = set(edges)
    found = []
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(pos[u] < pos[v] for u, v in edges) and all((a, b) in adj for a, b in zip(perm, perm[1:])):
            found.append(list(perm))
    return found


@given(st.integers(1, 7), st.integers(0, 10**6))
def test_induced_path_criterion_matches_brute_force(n, seed):
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    g = SimpleNamespace(n=n, edges=edges)
    brute = _brute_hamiltonian(n, edges)
    try:
        path = induced_path(g, [])
    except NotHamiltonian:
        assert brute == []
    else:
        assert brute == [path]


def test_induced_path_criterion_exhaustive_small():
    # every DAG on four labelled vertices consistent with the order 0 < 1 < 2 < 3
    pairs = list(itertools.combinations(range(4), 2))
    for mask in range(1 << len(pairs)):
        edges = [p for i, p in enumerate(pairs) if mask >> i & 1]
        brute = _brute_hamiltonian(4, edges)
        try:
            assert brute == [induced_path(SimpleNamespace(n=4, edges=edges), [])]
        except NotHamiltonian:
            assert brute == []


def test_validate_examples():
    g = diamond()
    assert validate_completion(g, [CompletionEdge(2, 1, 0)]).ok
    fs = trace_faces(g)
    bad = validate_completion(g, [CompletionEdge(2, 1, fs.s_star)])
    assert not bad.ok and bad.failures[0][0] == "edge-hosting"
    assert validate_completion(ladder3(), ZIGZAG3).ok
    assert induced_path(ladder3(), ZIGZAG3) == [0, 1, 4, 5, 2, 3, 6, 7]


def test_validate_reports_each_check():
    g = diamond()
    checks = lambda S: {name for name, _ in validate_completion(g, S).failures}
    assert "acyclicity" in checks([CompletionEdge(2, 1, 0), CompletionEdge(1, 2, 0)])
    assert "unique-topological-order" in checks([])
    assert "edge-hosting" in checks([CompletionEdge(0, 1, 0)])
    l3 = ladder3()
    crossing = [CompletionEdge(1, 5, 0), CompletionEdge(4, 2, 0)]
    assert "non-crossing" in {n for n, _ in validate_completion(l3, crossing).failures}


def _geometric_cross(cycle, e1, e2):
    """Chords of a convex polygon, intersected as segments."""
    k = len(cycle)
    pt = {v: (math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i, v in enumerate(cycle)}

    def orient(p, q, r):
        return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])

    a, b, c, d = pt[e1[0]], pt[e1[1]], pt[e2[0]], pt[e2[1]]
    if len({e1[0], e1[1], e2[0], e2[1]}) < 4:
        return False
    return orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0


def test_interleaving_matches_geometry():
    face = trace_faces(ladder(4)).faces[0]
    cycle = face.boundary_cycle()
    pos = {v: i for i, v in enumerate(cycle)}
    left, right = face.left[1:-1], face.right[1:-1]
    chords = [CompletionEdge(u, v, 0) for u in left for v in right] + [CompletionEdge(v, u, 0) for u in left for v in right]
    for e1, e2 in itertools.combinations(chords, 2):
        assert _crossing(pos, e1, e2) == _geometric_cross(cycle, e1, e2)


def test_face_shape_examples():
    assert check_face_shape(ladder3(), ZIGZAG3).ok
    assert check_face_shape(diamond(), [CompletionEdge(2, 1, 0)]).ok


def test_normalize_examples():
    out = normalize(ladder3(), ZIGZAG3)
    assert out.edges == (CompletionEdge(3, 4, 0),)
    assert out.path == (0, 1, 2, 3, 4, 5, 6, 7)
    same = normalize(diamond(), [CompletionEdge(2, 1, 0)])
    assert same.edges == (CompletionEdge(2, 1, 0),)


def test_normalize_ladder5_two_rounds():
    g = ladder(5)
    S = [CompletionEdge(a, b, 0) for a, b in ladder_zigzag(5)]
    assert S == [CompletionEdge(1, 6, 0), CompletionEdge(7, 2, 0), CompletionEdge(3, 8, 0), CompletionEdge(9, 4, 0), CompletionEdge(5, 10, 0)]
    assert validate_completion(g, S).ok
    out = normalize(g, S)
    assert out.edges == (CompletionEdge(5, 6, 0),)
    assert out.path == tuple(range(12))


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6, 7, 8])
def test_normalize_ladder_family(k):
    g = ladder(k)
    S = [CompletionEdge(a, b, 0) for a, b in ladder_zigzag(k)]
    assert validate_completion(g, S).ok
    assert check_face_shape(g, S).ok
    out = normalize(g, S)
    assert validate_completion(g, out.edges).ok
    expected = 1 if k % 2 else 2
    assert len(out.edges) == expected


def test_normalize_rejects_invalid():
    with pytest.raises(InvalidInput):
        normalize(diamond(), [])


def _opposite_sides(fs, f):
    face = fs.faces[f]
    return set(face.left[1:-1]), set(face.right[1:-1])


@given(st.integers(0, 10**6), st.integers(4, 8))
def test_oracle_witness_properties(seed, n):
    g = random_st(seed, n)
    fs = trace_faces(g)
    for comp in itertools.islice(oracle_all(g), 20):
        S, path = list(comp.edges), list(comp.path)
        assert validate_completion(g, S).ok
        assert check_face_shape(g, S).ok
        pos = {v: i for i, v in enumerate(path)}
        # the path extends the precedence order
        assert all(pos[u] < pos[v] for u, v in g.edges)
        # crossing a face from one border to the other uses a completion edge of that face
        for f in fs.inner_faces():
            left, right = _opposite_sides(fs, f.id)
            for u in left | right:
                for v in (right if u in left else left):
                    if pos[u] > pos[v]:
                        continue
                    seg = path[pos[u] : pos[v] + 1]
                    hops = {(a, b) for a, b in zip(seg, seg[1:])}
                    src_side = left if u in left else right
                    assert any(
                        (e.tail, e.head) in hops and e.face == f.id and e.tail in src_side and e.head not in src_side
                        for e in S
                    )
        out = normalize(g, S)
        assert validate_completion(g, out.edges).ok
        assert len(out.edges) <= len(S)
        assert all(c <= 2 for c in per_face_counts(out.edges).values())
        assert per_face_counts(normalize(g, out.edges).edges) == per_face_counts(out.edges)
