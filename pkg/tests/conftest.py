import numpy as np
import pytest

from _oracles import GRAPHS
from connwidth import make_graph_boundary, make_graph_cut
from connwidth.generators import random_graph


@pytest.fixture(scope="session")
def p3():
    return make_graph_cut(GRAPHS["P3"], "P3")


@pytest.fixture(scope="session")
def c4():
    return make_graph_cut(GRAPHS["C4"], "C4")


@pytest.fixture(scope="session")
def k4():
    return make_graph_cut(GRAPHS["K4"], "K4")


@pytest.fixture(scope="session")
def named_systems():
    out = {}
    for name, g in GRAPHS.items():
        out[f"{name}-cut"] = make_graph_cut(g, name)
        out[f"{name}-boundary"] = make_graph_boundary(g, name)
    return out


def seeded_graphs(count, max_n, seed, max_edges=None):
    """Deterministic random graphs with 1..max_n vertices (and at most
    max_edges edges when given)."""
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(1, max_n + 1))
        p = float(rng.uniform(0.2, 0.9))
        g = random_graph(n, p, int(rng.integers(0, 2**63)))
        if max_edges is not None and len(g.edges) > max_edges:
            continue
        out.append(g)
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
