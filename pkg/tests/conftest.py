import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from subtreeopt import oracle
from subtreeopt.maxmean import solve_max_mean
from subtreeopt.parametric import solve_parametric
from subtreeopt.tree import RootedTree

settings.register_profile(
    "default", deadline=None, max_examples=150,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# filled by test_acceptance, printed at the end of the run
ACCEPTANCE_RESULTS: dict[int, tuple[bool, str]] = {}


def tree(parents, a, b) -> RootedTree:
    return RootedTree.from_parents(parents, a, b)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(scope="session", autouse=True)
def warm_jit():
    """Compile (or load) every kernel once so timings measure the algorithms."""
    t = oracle.random_tree(np.random.default_rng(0), 30)
    solve_max_mean(t)
    solve_max_mean(t, selection="mom")
    solve_parametric(t)
    solve_parametric(t, clamp_root=True)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        ok, detail = ACCEPTANCE_RESULTS[k]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {k:2d}: {detail}")
