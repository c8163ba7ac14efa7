"""Seeded acceptance corpus: the named small graphs plus 200 random graphs
whose cut and boundary systems both have ground sets of size at most 10."""

from functools import lru_cache

import numpy as np

from _oracles import GRAPHS
from connwidth import make_graph_boundary, make_graph_cut
from connwidth.generators import random_graph

CORPUS_SEED = 20240611


@lru_cache(maxsize=None)
def random_graphs(count=200, seed=CORPUS_SEED):
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        n = int(rng.integers(2, 11))
        p = float(rng.uniform(0.15, min(0.9, 2 * 10 / (n * (n - 1)))))
        g = random_graph(n, p, int(rng.integers(0, 2**63)))
        if 1 <= len(g.edges) <= 10:
            out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def named_systems():
    out = []
    for name, g in GRAPHS.items():
        out.append(make_graph_cut(g, f"{name}-cut"))
        out.append(make_graph_boundary(g, f"{name}-boundary"))
    return tuple(out)


@lru_cache(maxsize=None)
def corpus():
    out = list(named_systems())
    for i, g in enumerate(random_graphs()):
        out.append(make_graph_cut(g, f"random{i}-cut"))
        out.append(make_graph_boundary(g, f"random{i}-boundary"))
    return tuple(out)
