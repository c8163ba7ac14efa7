"""Set families and the two axiom systems evaluated on them.

Single-ideal axioms: IB, IH, SIS, IW and the extra exactness axiom IE.
Linear-obstacle axioms: O1, O2, O3.

Each ``check_*`` returns an :class:`AxiomReport`; on failure the report
carries the first witness found in ascending mask order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .core import AxiomId, AxiomReport, ConnectivitySystem, elements_of, passed, submasks

__all__ = [
    "AxiomId",
    "AxiomReport",
    "IhVariant",
    "SetFamily",
    "check_IB",
    "check_IH",
    "check_SIS",
    "check_IW",
    "check_IE",
    "check_O1",
    "check_O2",
    "check_O3",
    "is_single_ideal",
    "is_linear_obstacle",
]


class IhVariant(str, enum.Enum):
    LITERAL = "literal"
    GUARDED = "guarded"


@dataclass(frozen=True)
class SetFamily:
    members: tuple[int, ...] = ()
    _lookup: frozenset = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        if members and members[0] < 0:
            raise ValueError(f"negative mask {members[0]}")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "_lookup", frozenset(members))

    @classmethod
    def of(cls, masks: Iterable[int]) -> "SetFamily":
        return cls(tuple(masks))

    @classmethod
    def from_elements(cls, sets: Iterable[Iterable[int]]) -> "SetFamily":
        out = []
        for s in sets:
            m = 0
            for e in s:
                m |= 1 << e
            out.append(m)
        return cls(tuple(out))

    def __contains__(self, mask: int) -> bool:
        return mask in self._lookup

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def check_valid(self, n: int) -> None:
        if self.members and self.members[-1] >= 1 << n:
            raise ValueError(f"mask {self.members[-1]} out of range for n={n}")

    def to_json(self) -> dict:
        return {"members": list(self.members)}

    def pretty(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, elements_of(m))) + "}" for m in self.members) + "}"


# ---------------------------------------------------------------------------
# per-(system, k) precomputation, shared by every family checked against it


@lru_cache(maxsize=512)
def _efficient(sys: ConnectivitySystem, k: int) -> tuple[int, ...]:
    return tuple(m for m in range(sys.size) if sys.lookup[m] <= k)


@lru_cache(maxsize=512)
def _light_elements(sys: ConnectivitySystem, k: int) -> tuple[int, ...]:
    return tuple(e for e in range(sys.n) if sys.lookup[1 << e] <= k)


@lru_cache(maxsize=512)
def _o3_triggers(sys: ConnectivitySystem, k: int) -> tuple[tuple[int, int, int], ...]:
    """Disjoint k-efficient pairs (A, B) missing at most one element, with C the
    remainder. Ordered by C (empty first, then singletons), then by A."""
    full, v = sys.full, sys.lookup
    out = []
    for c in [0] + [1 << e for e in range(sys.n)]:
        rest = full ^ c
        for a in submasks(rest):
            b = rest ^ a
            if v[a] <= k and v[b] <= k:
                out.append((a, b, c))
    return tuple(out)


# ---------------------------------------------------------------------------
# single-ideal axioms


def check_IB(sys: ConnectivitySystem, family: SetFamily, k: int) -> AxiomReport:
    for a in family:
        if sys.lookup[a] > k:
            return AxiomReport(AxiomId.IB, False, (a,), note=f"f(A) = {sys(a)} > {k}")
    return passed(AxiomId.IB)


def check_IH(sys: ConnectivitySystem, family: SetFamily, k: int, variant: IhVariant | str = IhVariant.GUARDED) -> AxiomReport:
    guarded = IhVariant(variant) is IhVariant.GUARDED
    v = sys.lookup
    for b in family:
        for a in submasks(b):
            if a == b:
                continue
            if a in family or (guarded and v[a] > k):
                continue
            return AxiomReport(
                AxiomId.IH, False, (a, b),
                note=f"proper subset A of member B missing ({IhVariant(variant).value}, f(A) = {sys(a)})",
            )
    return passed(AxiomId.IH, IhVariant(variant).value)


def check_SIS(sys: ConnectivitySystem, family: SetFamily, k: int) -> AxiomReport:
    v = sys.lookup
    light = _light_elements(sys, k)
    for a in family:
        for e in light:
            grown = a | (1 << e)
            if grown != a and v[grown] <= k and grown not in family:
                return AxiomReport(
                    AxiomId.SIS, False, (a,), element=e,
                    note=f"f({{e}}) = {sys(1 << e)}, f(A+e) = {sys(grown)} <= {k} but A+e missing",
                )
    return passed(AxiomId.SIS)


def check_IW(sys: ConnectivitySystem, family: SetFamily) -> AxiomReport:
    if sys.full in family:
        return AxiomReport(AxiomId.IW, False, (sys.full,), note="ground set is a member")
    return passed(AxiomId.IW)


def check_IE(sys: ConnectivitySystem, family: SetFamily, k: int) -> AxiomReport:
    full = sys.full
    for a in _efficient(sys, k):
        inside = a in family
        if inside == ((full ^ a) in family):
            what = "both A and X-A are members" if inside else "neither A nor X-A is a member"
            return AxiomReport(AxiomId.IE, False, (a,), note=what)
    return passed(AxiomId.IE)


# ---------------------------------------------------------------------------
# linear-obstacle axioms


def check_O1(sys: ConnectivitySystem, family: SetFamily, k: int) -> AxiomReport:
    rep = check_IB(sys, family, k)
    if rep.holds:
        return passed(AxiomId.O1)
    return AxiomReport(AxiomId.O1, False, rep.witnesses, note=rep.note)


def check_O2(sys: ConnectivitySystem, family: SetFamily, k: int) -> AxiomReport:
    v = sys.lookup
    for b in family:
        for a in submasks(b):
            if v[a] <= k and a not in family:
                return AxiomReport(AxiomId.O2, False, (a, b), note=f"k-efficient subset A (f = {sys(a)}) of member B missing")
    return passed(AxiomId.O2)


def check_O3(sys: ConnectivitySystem, family: SetFamily, k: int) -> AxiomReport:
    for a, b, c in _o3_triggers(sys, k):
        if a not in family and b not in family:
            return AxiomReport(
                AxiomId.O3, False, (a, b, c),
                note=f"disjoint near-cover with f(A) = {sys(a)}, f(B) = {sys(b)}; neither is a member",
            )
    return passed(AxiomId.O3)


# ---------------------------------------------------------------------------
# conjunctions


def is_single_ideal(
    sys: ConnectivitySystem,
    family: SetFamily,
    k: int,
    variant: IhVariant | str = IhVariant.GUARDED,
    require_IE: bool = False,
    fail_fast: bool = False,
) -> tuple[bool, list[AxiomReport]]:
    checks = [
        lambda: check_IB(sys, family, k),
        lambda: check_IH(sys, family, k, variant),
        lambda: check_SIS(sys, family, k),
        lambda: check_IW(sys, family),
    ]
    if require_IE:
        checks.append(lambda: check_IE(sys, family, k))
    return _conjunction(checks, fail_fast)


def is_linear_obstacle(
    sys: ConnectivitySystem, family: SetFamily, k: int, fail_fast: bool = False
) -> tuple[bool, list[AxiomReport]]:
    checks = [
        lambda: check_O1(sys, family, k),
        lambda: check_O2(sys, family, k),
        lambda: check_O3(sys, family, k),
    ]
    return _conjunction(checks, fail_fast)


def _conjunction(checks, fail_fast: bool) -> tuple[bool, list[AxiomReport]]:
    failures = []
    for check in checks:
        rep = check()
        if not rep.holds:
            failures.append(rep)
            if fail_fast:
                break
    return not failures, failures
