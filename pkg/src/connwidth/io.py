"""JSON interchange: instance files, family files, atomic report writes."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

from .config import GuardExceeded, Guards, default_guards
from .core import ConnectivitySystem, Graph, make_explicit, make_graph_boundary, make_graph_cut
from .families import SetFamily

KINDS = ("explicit", "graph_cut", "graph_boundary")


class InstanceError(ValueError):
    """Malformed instance or family input. ``where`` names the field or the
    line/column of a JSON syntax error."""

    def __init__(self, where: str, message: str):
        self.where = where
        super().__init__(f"{where}: {message}")


@dataclass(frozen=True)
class InstanceFile:
    name: str
    kind: str
    n: int
    values: tuple[int, ...] | None = None
    vertices: int | None = None
    edges: tuple[tuple[int, int], ...] | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "kind": self.kind, "n": self.n}
        if self.values is not None:
            out["values"] = list(self.values)
        if self.vertices is not None:
            out["vertices"] = self.vertices
        if self.edges is not None:
            out["edges"] = [list(e) for e in self.edges]
        return out

    def graph(self) -> Graph:
        return Graph(self.vertices, self.edges)

    def build(self, guards: Guards | None = None) -> ConnectivitySystem:
        """Materialize the system. Explicit tables are not validated here."""
        if self.kind == "explicit":
            return make_explicit(self.n, self.values, validate=False, source=self.name, guards=guards)
        if self.kind == "graph_cut":
            return make_graph_cut(self.graph(), source=self.name)
        return make_graph_boundary(self.graph(), source=self.name)


def _loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"line {exc.lineno} column {exc.colno}", exc.msg) from None


def _int(data: dict, key: str, required: bool = True) -> int | None:
    if key not in data:
        if required:
            raise InstanceError(key, "missing required field")
        return None
    val = data[key]
    if isinstance(val, bool) or not isinstance(val, int):
        raise InstanceError(key, f"expected an integer, got {val!r}")
    return val


def parse_instance(data: dict, guards: Guards | None = None) -> InstanceFile:
    guards = guards or default_guards()
    if not isinstance(data, dict):
        raise InstanceError("<root>", "expected a JSON object")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise InstanceError("name", "expected a string")
    kind = data.get("kind")
    if kind not in KINDS:
        raise InstanceError("kind", f"expected one of {', '.join(KINDS)}, got {kind!r}")
    n = _int(data, "n")
    if n < 1:
        raise InstanceError("n", "ground set must have at least one element")
    if n > guards.max_explicit_n:
        raise GuardExceeded("max_explicit_n", guards.max_explicit_n, n)

    if kind == "explicit":
        values = data.get("values")
        if not isinstance(values, list):
            raise InstanceError("values", "explicit instances need a list of 2^n integers")
        if len(values) != 1 << n:
            raise InstanceError("values", f"has {len(values)} entries, expected {1 << n}")
        for i, v in enumerate(values):
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise InstanceError(f"values[{i}]", f"expected a natural number, got {v!r}")
        return InstanceFile(name, kind, n, values=tuple(values))

    vertices = _int(data, "vertices")
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise InstanceError("edges", "expected a list of [u, v] pairs")
    pairs = []
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise InstanceError(f"edges[{i}]", f"expected [u, v], got {e!r}")
        u, v = e
        if not (0 <= u < vertices and 0 <= v < vertices):
            raise InstanceError(f"edges[{i}]", f"endpoint outside [0, {vertices})")
        if u == v:
            raise InstanceError(f"edges[{i}]", "self-loop")
        pairs.append((u, v))
    expected = vertices if kind == "graph_cut" else len(pairs)
    if n != expected:
        what = "vertices" if kind == "graph_cut" else "len(edges)"
        raise InstanceError("n", f"{kind} needs n == {what} ({expected}), got {n}")
    return InstanceFile(name, kind, n, vertices=vertices, edges=tuple(pairs))


def load_instance(path: str | os.PathLike, guards: Guards | None = None) -> InstanceFile:
    return parse_instance(_loads(Path(path).read_text()), guards)


def instance_from_system(sys: ConnectivitySystem, name: str = "") -> InstanceFile:
    name = name or sys.source
    if sys.provenance == "explicit" or sys.graph is None:
        return InstanceFile(name, "explicit", sys.n, values=tuple(sys.values.tolist()))
    g = sys.graph
    return InstanceFile(name, sys.provenance, sys.n, vertices=g.vertex_count, edges=g.edges)


def parse_family(data: dict, n: int) -> SetFamily:
    if not isinstance(data, dict) or not isinstance(data.get("members"), list):
        raise InstanceError("members", "expected {\"members\": [int, ...]}")
    for i, m in enumerate(data["members"]):
        if isinstance(m, bool) or not isinstance(m, int):
            raise InstanceError(f"members[{i}]", f"expected an integer mask, got {m!r}")
        if not 0 <= m < 1 << n:
            raise InstanceError(f"members[{i}]", f"mask {m} out of range for n={n}")
    return SetFamily(tuple(data["members"]))


def load_family(path: str | os.PathLike, n: int) -> SetFamily:
    return parse_family(_loads(Path(path).read_text()), n)


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def families_jsonl(families) -> str:
    """Enumeration streaming format: one family object per line."""
    return "".join(dumps(fam.to_json()) + "\n" for fam in families)


def write_atomic(path: str | os.PathLike, text: str) -> None:
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
