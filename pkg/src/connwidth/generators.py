"""Seeded instance corpus.

Random graphs use SplitMix64 so that the same seed gives the same graph in
any language:

    state = (state + 0x9E3779B97F4A7C15) mod 2^64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) mod 2^64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) mod 2^64
    output z ^ (z >> 31)

A uniform draw in [0, 1) is ``(output >> 11) / 2**53``. The G(n, p) graph
visits pairs (i, j), i < j, in lexicographic order and keeps the edge when
its draw is below p.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .core import Graph
from .io import InstanceFile, dumps, write_atomic

MASK64 = (1 << 64) - 1
GENERATORS = ("path", "cycle", "complete", "star", "random")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def uniform(self) -> float:
        return (self.next() >> 11) / float(1 << 53)


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def star_graph(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1 (so star_graph(4) has three leaves)."""
    return Graph(n, tuple((0, i) for i in range(1, n)))


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = SplitMix64(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.uniform() < p]
    return Graph(n, tuple(edges))


@dataclass(frozen=True)
class CorpusSpec:
    generator: str
    n: int
    p: float = 0.5
    seed: int = 0
    kind: str = "graph_cut"

    def __post_init__(self):
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.kind not in ("graph_cut", "graph_boundary"):
            raise ValueError(f"generated instances are graph_cut or graph_boundary, not {self.kind!r}")
        if self.n < 1:
            raise ValueError("n must be positive")

    def params(self) -> str:
        out = f"n{self.n}"
        if self.generator == "random":
            out += f"-p{self.p:g}"
        if self.kind == "graph_boundary":
            out += "-boundary"
        return out

    def filename(self) -> str:
        return f"{self.generator}-{self.params()}-{self.seed}.json"

    def graph(self) -> Graph:
        if self.generator == "random":
            return random_graph(self.n, self.p, self.seed)
        return {"path": path_graph, "cycle": cycle_graph, "complete": complete_graph, "star": star_graph}[self.generator](self.n)

    def instance(self) -> InstanceFile:
        g = self.graph()
        n = g.vertex_count if self.kind == "graph_cut" else len(g.edges)
        if n < 1:
            raise ValueError(f"{self.generator} graph with n={self.n} has no edges for a boundary instance")
        return InstanceFile(f"{self.generator}-{self.params()}", self.kind, n, vertices=g.vertex_count, edges=g.edges)


def render(spec: CorpusSpec) -> str:
    return dumps(spec.instance().to_json()) + "\n"


def write_instance(spec: CorpusSpec, out_dir: str | Path) -> Path:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / spec.filename()
    write_atomic(path, render(spec))
    return path
