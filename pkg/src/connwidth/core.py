"""Connectivity systems: a ground set {0, ..., n-1} plus a symmetric
submodular function stored as a dense table over all 2^n subsets.

Subsets are plain ``int`` bit masks throughout the package (bit i set iff
element i is a member).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .config import GuardExceeded, Guards, default_guards


# ---------------------------------------------------------------------------
# subset helpers


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << int(e)
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def complement(mask: int, n: int) -> int:
    return full_mask(n) ^ mask


def submasks(mask: int):
    """Yield every submask of ``mask`` in ascending order (including 0 and mask)."""
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    yield from reversed(subs)


# ---------------------------------------------------------------------------
# reports


class AxiomId(str, enum.Enum):
    IB = "IB"
    IH = "IH"
    SIS = "SIS"
    IW = "IW"
    IE = "IE"
    O1 = "O1"
    O2 = "O2"
    O3 = "O3"
    SYM = "SYM"
    SUBMOD = "SUBMOD"
    L1a = "L1a"
    L1b = "L1b"
    PRE = "PRE"


@dataclass(frozen=True)
class AxiomReport:
    """Verdict for one axiom. On failure ``witnesses`` holds the subset masks
    (and ``element`` the element, where the axiom quantifies over one) at
    which the clause is false."""

    axiom: AxiomId
    holds: bool
    witnesses: tuple[int, ...] = ()
    element: int | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict:
        out = {
            "axiom": self.axiom.value,
            "holds": self.holds,
            "witnesses": list(self.witnesses),
        }
        if self.element is not None:
            out["element"] = self.element
        out["note"] = self.note
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AxiomReport":
        return cls(
            axiom=AxiomId(data["axiom"]),
            holds=bool(data["holds"]),
            witnesses=tuple(int(w) for w in data.get("witnesses", ())),
            element=data.get("element"),
            note=data.get("note", ""),
        )


def passed(axiom: AxiomId, note: str = "") -> AxiomReport:
    return AxiomReport(axiom, True, note=note)


class AxiomViolation(ValueError):
    """Raised by constructors when a table fails a required condition."""

    def __init__(self, report: AxiomReport):
        self.report = report
        super().__init__(report.note)


# ---------------------------------------------------------------------------
# systems


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside [0, {self.vertex_count})")
        object.__setattr__(self, "edges", edges)

    def self_loops(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v in self.edges if u == v]


@dataclass(frozen=True, eq=False)
class ConnectivitySystem:
    """Immutable (X, f) pair. ``values[m]`` is f of the subset with mask m.

    Equality and hashing are by identity so that systems can key caches.
    """

    n: int
    values: np.ndarray
    provenance: str = "explicit"
    source: str = ""
    graph: Graph | None = field(default=None, repr=False)

    @cached_property
    def lookup(self) -> list[int]:
        # plain-int copy of values; scalar indexing into numpy is slow in hot loops
        return self.values.tolist()

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def size(self) -> int:
        return 1 << self.n

    def __call__(self, mask: int) -> int:
        return int(self.values[mask])

    def complement(self, mask: int) -> int:
        return self.full ^ mask

    def singleton_values(self) -> list[int]:
        return [int(self.values[1 << e]) for e in range(self.n)]

    def describe(self) -> dict:
        out = {"n": self.n, "kind": self.provenance}
        if self.source:
            out["name"] = self.source
        return out


def _freeze(values) -> np.ndarray:
    arr = np.array(values, dtype=np.int64)
    arr.setflags(write=False)
    return arr


def make_explicit(
    n: int,
    values: Sequence[int],
    validate: bool = True,
    source: str = "",
    guards: Guards | None = None,
) -> ConnectivitySystem:
    guards = guards or default_guards()
    if n < 1:
        raise ValueError("ground set must have at least one element")
    if n > guards.max_explicit_n:
        raise GuardExceeded("max_explicit_n", guards.max_explicit_n, n)
    if len(values) != 1 << n:
        raise ValueError(f"table has {len(values)} entries, expected 2^{n} = {1 << n}")
    table = _freeze(values)
    if (table < 0).any():
        m = int(np.flatnonzero(table < 0)[0])
        raise ValueError(f"table entry at mask {m} is negative")
    sys = ConnectivitySystem(n, table, "explicit", source)
    if validate:
        report = validate_symmetric_submodular(sys, guards=guards)
        if not report.holds:
            raise AxiomViolation(report)
    return sys


def _check_loops(g: Graph) -> None:
    loops = g.self_loops()
    if loops:
        raise ValueError(f"self-loop at vertex {loops[0][0]}")


def cut_table(g: Graph) -> np.ndarray:
    masks = np.arange(1 << g.vertex_count, dtype=np.int64)
    table = np.zeros_like(masks)
    for u, v in g.edges:
        table += ((masks >> u) ^ (masks >> v)) & 1
    return table


def make_graph_cut(g: Graph, source: str = "") -> ConnectivitySystem:
    """Vertex ground set, f(A) = number of edges with exactly one end in A."""
    if g.vertex_count < 1:
        raise ValueError("graph needs at least one vertex")
    _check_loops(g)
    return ConnectivitySystem(g.vertex_count, _freeze(cut_table(g)), "graph_cut", source, g)


def boundary_table(g: Graph) -> np.ndarray:
    m = len(g.edges)
    masks = np.arange(1 << m, dtype=np.int64)
    full = (1 << m) - 1
    incident = [0] * g.vertex_count
    for i, (u, v) in enumerate(g.edges):
        incident[u] |= 1 << i
        incident[v] |= 1 << i
    table = np.zeros_like(masks)
    for inc in incident:
        if inc:
            table += ((masks & inc) != 0) & (((full ^ masks) & inc) != 0)
    return table


def make_graph_boundary(g: Graph, source: str = "") -> ConnectivitySystem:
    """Edge ground set, f(A) = number of vertices meeting both A and E - A."""
    if not g.edges:
        raise ValueError("graph needs at least one edge")
    _check_loops(g)
    return ConnectivitySystem(len(g.edges), _freeze(boundary_table(g)), "graph_boundary", source, g)


def eval_subset(sys: ConnectivitySystem, mask: int) -> int:
    return int(sys.values[mask])


def is_k_efficient(sys: ConnectivitySystem, mask: int, k: int) -> bool:
    return int(sys.values[mask]) <= k


def require_validatable(sys: ConnectivitySystem, guards: Guards | None) -> None:
    guards = guards or default_guards()
    if sys.n > guards.max_validate_n:
        raise GuardExceeded("max_validate_n", guards.max_validate_n, sys.n)


def validate_symmetric_submodular(sys: ConnectivitySystem, guards: Guards | None = None) -> AxiomReport:
    """Exhaustive check of symmetry (2^n masks) and submodularity (4^n pairs).

    The first failure in ascending mask order is reported; the symmetry
    sweep runs first.
    """
    require_validatable(sys, guards)
    v = sys.values
    bad = np.flatnonzero(v != v[::-1])
    if bad.size:
        m = int(bad[0])
        return AxiomReport(
            AxiomId.SYM, False, (m, sys.complement(m)),
            note=f"f({m:0{sys.n}b}) = {v[m]} != f({sys.complement(m):0{sys.n}b}) = {v[sys.complement(m)]}",
        )
    idx = np.arange(sys.size, dtype=np.int64)
    for a in range(sys.size):
        viol = v[a] + v < v[a & idx] + v[a | idx]
        if viol.any():
            b = int(np.argmax(viol))
            return AxiomReport(
                AxiomId.SUBMOD, False, (a, b),
                note=f"f(A) + f(B) = {v[a] + v[b]} < f(A&B) + f(A|B) = {v[a & b] + v[a | b]}",
            )
    return passed(AxiomId.SUBMOD, "symmetric and submodular")
