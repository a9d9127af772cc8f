import itertools

import pytest
from hypothesis import HealthCheck, settings

from stbook.generate import GenConfig, gen_random_nfree, gen_random_st

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def random_st(seed, n, transitive=0.25, density=0.6):
    return gen_random_st(GenConfig(n, density=density, transitive=transitive, seed=seed))


def random_nfree(seed, n, transitive=0.2, density=0.6):
    return gen_random_nfree(GenConfig(n, density=density, transitive=transitive, seed=seed))


def linear_extensions(n, edges):
    """Every topological order, by brute force over permutations."""
    for perm in itertools.permutations(range(n)):
        pos = {v: i for i, v in enumerate(perm)}
        if all(pos[u] < pos[v] for u, v in edges):
            yield list(perm)


@pytest.fixture
def samples_dir():
    from pathlib import Path

    return Path(__file__).resolve().parent.parent / "samples"


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
