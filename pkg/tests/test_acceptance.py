"""Acceptance criteria, one test per criterion.

Each test prints a single ``PASS``/``FAIL`` line; the lines are repeated in
the pytest terminal summary.  Run standalone with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import functools
import itertools
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from stbook.book import book_embed
from stbook.completion import (
    CompletionEdge,
    check_face_shape,
    normalize,
    per_face_counts,
    validate_completion,
)
from stbook.fixtures import diamond, ladder, ladder3, ladder_zigzag, nfig
from stbook.generate import (
    GenConfig,
    gen_ladder_width2,
    gen_multi_terminal_nfree,
    gen_random_nfree,
    gen_random_st,
)
from stbook.graph import check_st, mirror, trace_faces
from stbook.mss import mss_decide
from stbook.nfree import complete_nfree
from stbook.oracle import oracle_all, oracle_count, oracle_exists
from stbook.patterns import augment_to_st, brute_force_N, find_embedded_H, find_embedded_N
from stbook.width import poset_width

RESULTS: list[str] = []


def report(tag: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {tag}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


# instance families, shared between criteria


@functools.lru_cache(maxsize=None)
def oracle_instances():
    """500+ fixed-seed st-digraphs with 4 <= n <= 9 and a spread of transitive edges."""
    out = []
    for seed in range(540):
        n = 4 + seed % 6
        transitive = (0.1, 0.3, 0.5)[seed % 3]
        out.append(gen_random_st(GenConfig(n, density=0.7, transitive=transitive, seed=seed)))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def nfree_instances():
    return tuple(gen_random_nfree(GenConfig(2 + seed % 49, transitive=0.2, seed=10_000 + seed)) for seed in range(1050))


produced: list[tuple] = []  # (graph, completion edges, path) for the book-embedding criterion


# 1


def test_c1_oracle_equivalence():
    start = time.perf_counter()
    mismatches = invalid = yes = 0
    for g in oracle_instances():
        found = mss_decide(g)
        truth = oracle_exists(g)
        if (found is None) != (truth is None):
            mismatches += 1
        for comp in (found, truth):
            if comp is not None:
                produced.append((g, comp.edges, comp.path))
                if not validate_completion(g, comp.edges).ok:
                    invalid += 1
        yes += found is not None
    elapsed = time.perf_counter() - start
    total = len(oracle_instances())
    ok = total >= 500 and mismatches == 0 and invalid == 0 and elapsed < 60
    report(
        "C1 oracle equivalence",
        ok,
        f"{total} instances ({yes} yes / {total - yes} no), {mismatches} disagreements, "
        f"{invalid} invalid witnesses, {elapsed:.1f}s (limit 60s)",
    )


# 2


def _nfree_ok(g) -> bool:
    comp = complete_nfree(g)
    produced.append((g, comp.edges, comp.path))
    counts = per_face_counts(comp.edges)
    fs = trace_faces(g)
    return (
        validate_completion(g, comp.edges).ok
        and check_face_shape(g, comp.edges).ok
        and all(fs.is_inner(f) and c <= 1 for f, c in counts.items())
    )


def _best_time(g, repeats=3) -> float:
    best = float("inf")
    for _ in range(repeats):
        t = time.perf_counter()
        complete_nfree(g)
        best = min(best, time.perf_counter() - t)
    return best


def test_c2_nfree_construction():
    small = nfree_instances()
    failures = sum(not _nfree_ok(g) for g in small)
    large = {n: gen_random_nfree(GenConfig(n, transitive=0.2, seed=n)) for n in (10**3, 10**4, 10**5)}
    for g in large.values():
        comp = complete_nfree(g)
        counts = per_face_counts(comp.edges)
        if not (validate_completion(g, comp.edges).ok and check_face_shape(g, comp.edges).ok and max(counts.values(), default=0) <= 1):
            failures += 1
    times = {n: _best_time(g) for n, g in large.items()}
    ratio = times[10**5] / times[10**4]
    ok = len(small) >= 1000 and failures == 0 and ratio <= 15
    report(
        "C2 N-free construction",
        ok,
        f"{len(small)} instances n<=50 + n in 1e3/1e4/1e5, {failures} failures, "
        f"times {times[10**3]:.4f}/{times[10**4]:.4f}/{times[10**5]:.4f}s, ratio 1e5/1e4 = {ratio:.1f} (limit 15)",
    )


# 3


def test_c3_fixture_exactness():
    checks = []
    d = complete_nfree(diamond())
    checks.append(("nfree DIAMOND", d.edges == (CompletionEdge(2, 1, 0),) and d.path == (0, 2, 1, 3)))
    m = mss_decide(diamond())
    checks.append(("mss DIAMOND", m.edges == (CompletionEdge(1, 2, 0),) and m.path == (0, 1, 2, 3)))
    zig = [CompletionEdge(1, 4, 0), CompletionEdge(5, 2, 0), CompletionEdge(3, 6, 0)]
    z = normalize(ladder3(), zig)
    checks.append(("normalize LADDER3", z.edges == (CompletionEdge(3, 4, 0),) and z.path == tuple(range(8))))
    witnesses = {c.path for c in oracle_all(diamond())}
    checks.append(("oracle DIAMOND", witnesses == {(0, 1, 2, 3), (0, 2, 1, 3)} and oracle_count(diamond()) == 2))
    checks.append(("oracle first witness", oracle_exists(diamond()).path == (0, 1, 2, 3)))
    lad = {c.path for c in oracle_all(ladder3())}
    checks.append(("oracle LADDER3 paths", z.path in lad and complete_nfree(ladder3()).path in lad))
    for g, comp in ((diamond(), d), (diamond(), m), (ladder3(), z)):
        produced.append((g, comp.edges, comp.path))
    bad = [name for name, ok in checks if not ok]
    report("C3 fixture exactness", not bad, f"{len(checks) - len(bad)}/{len(checks)} checks" + (f", failed: {bad}" if bad else ""))


# 4


def _normalize_ok(g, S) -> bool:
    out = normalize(g, S)
    before, after = per_face_counts(S), per_face_counts(out.edges)
    if not validate_completion(g, out.edges).ok or len(out.edges) > len(S):
        return False
    for f, k in before.items():
        want = 1 if k % 2 else min(k, 2)
        if after.get(f, 0) != want:
            return False
    return set(after) <= set(before) and all(c <= 2 for c in after.values())


def test_c4_normalize_bound():
    sets = failures = 0
    for g in oracle_instances():
        for comp in oracle_all(g):
            sets += 1
            failures += not _normalize_ok(g, list(comp.edges))
    for k in range(1, 12):
        sets += 1
        S = [CompletionEdge(a, b, 0) for a, b in ladder_zigzag(k)]
        failures += not _normalize_ok(ladder(k), S)
    report("C4 normalize bound", failures == 0, f"{sets} completion sets (oracle witnesses n<=9 and ladders k=1..11), {failures} failures")


# 5


def test_c5_pattern_detection():
    occ = find_embedded_N(nfig())
    labels_ok = occ is not None and (occ.a, occ.b, occ.c, occ.d) == (0, 1, 2, 3)
    mirrored = mirror(nfig())
    mirror_ok = find_embedded_N(mirrored) is None and find_embedded_H(mirrored) is not None
    disagreements = found = 0
    for seed in range(1000):
        g = gen_random_st(GenConfig(4 + seed % 5, density=0.7, transitive=(0.2, 0.5)[seed % 2], seed=seed))
        fast = find_embedded_N(g) is not None
        found += fast
        disagreements += fast != bool(brute_force_N(g))
    ok = labels_ok and mirror_ok and disagreements == 0
    report(
        "C5 pattern detection",
        ok,
        f"NFIG labels {'ok' if labels_ok else 'wrong'}, mirror H-not-N {'ok' if mirror_ok else 'wrong'}, "
        f"1000 graphs n<=8 ({found} with N), {disagreements} disagreements with brute force",
    )


# 6


def test_c6_augmentation():
    failures = 0
    total = 520
    for seed in range(total):
        g = gen_multi_terminal_nfree(GenConfig(5 + seed % 30, transitive=0.2, seed=seed))
        a = augment_to_st(g)
        try:
            check_st(a)
            trace_faces(a)
            keeps = a.edges[: g.m] == g.edges and all(
                tuple(e for e in a.out_rot[v] if e < g.m) == g.out_rot[v]
                and tuple(e for e in a.in_rot[v] if e < g.m) == g.in_rot[v]
                for v in range(g.n)
            )
            comp = complete_nfree(a)
            ok = keeps and find_embedded_N(a) is None and validate_completion(a, comp.edges).ok
        except Exception:
            ok = False
        failures += not ok
    report("C6 augmentation", failures == 0, f"{total} multi-terminal N-free inputs, {failures} failures")


# 7


def test_c7_book_embedding():
    if not produced:
        pytest.skip("runs after criteria 1-3")
    failures = 0
    for g, S, P in produced:
        try:
            book = book_embed(g, S, P)
        except Exception:
            failures += 1
            continue
        pos = book.position()
        for e, f in itertools.combinations(book.edges, 2):
            if e.page != f.page:
                continue
            a, b = sorted((pos[e.tail], pos[e.head]))
            c, d = sorted((pos[f.tail], pos[f.head]))
            if a < c < b < d or c < a < d < b:
                failures += 1
                break
    report("C7 book embedding", failures == 0, f"{len(produced)} (G, S, P) triples from C1-C3, {failures} with interleavings")


# 8


def test_c8_dp_scale():
    worst_time = 0.0
    worst_ratio = 0.0
    failures = 0
    count = 0
    for seed in range(60):
        n = 20 + (seed * 37) % 181
        g = gen_ladder_width2(n, seed=seed)
        if poset_width(g).width > 2:
            failures += 1
            continue
        stats: dict = {}
        t = time.perf_counter()
        mss_decide(g, stats=stats)
        elapsed = time.perf_counter() - t
        count += 1
        worst_time = max(worst_time, elapsed)
        worst_ratio = max(worst_ratio, stats["expanded"] / n**3)
        failures += elapsed >= 1.0 or stats["expanded"] > n**3
    report(
        "C8 DP scale",
        failures == 0,
        f"{count} width-2 instances n<=200, slowest {worst_time:.3f}s (limit 1s), "
        f"max expanded/n^3 = {worst_ratio:.5f} (limit 1)",
    )


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_c") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
