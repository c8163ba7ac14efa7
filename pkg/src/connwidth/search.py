"""Exhaustive searches over a connectivity system: k-efficient sets, family
enumeration, the single-ideal existence search, and exact linear-width.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .config import GuardExceeded, Guards, default_guards
from .core import ConnectivitySystem, submasks
from .families import IhVariant, SetFamily, check_IH, is_single_ideal


@dataclass(frozen=True)
class WidthResult:
    width: int
    ordering: tuple[int, ...]

    def to_json(self) -> dict:
        return {"width": self.width, "ordering": list(self.ordering)}


def prefix_width(sys: ConnectivitySystem, ordering) -> int:
    """Maximum of f over the nonempty prefixes of ``ordering``."""
    if sorted(ordering) != list(range(sys.n)):
        raise ValueError(f"{list(ordering)} is not a permutation of range({sys.n})")
    worst, prefix = 0, 0
    for e in ordering:
        prefix |= 1 << e
        worst = max(worst, int(sys.values[prefix]))
    return worst


def efficient_sets(sys: ConnectivitySystem, k: int) -> SetFamily:
    return SetFamily(tuple(np.flatnonzero(sys.values <= k).tolist()))


def linear_width(sys: ConnectivitySystem, guards: Guards | None = None) -> WidthResult:
    """Exact linear-width by dynamic programming over subsets.

    best[S] is the smallest achievable maximum of f over the prefixes of an
    ordering of S; best[S] = max(f(S), min over e in S of best[S - e]).
    """
    guards = guards or default_guards()
    n = sys.n
    if n > guards.max_dp_n:
        raise GuardExceeded("max_dp_n", guards.max_dp_n, n)
    v = sys.values
    masks = np.arange(1 << n, dtype=np.int64)
    sizes = np.bitwise_count(masks)
    best = np.zeros(1 << n, dtype=np.int64)
    inf = np.iinfo(np.int64).max
    for size in range(1, n + 1):
        layer = masks[sizes == size]
        low = np.full(layer.shape, inf, dtype=np.int64)
        for e in range(n):
            bit = np.int64(1 << e)
            has = (layer & bit) != 0
            cand = np.where(has, best[layer & ~bit], inf)
            np.minimum(low, cand, out=low)
        best[layer] = np.maximum(low, v[layer])

    # walk back from X, fixing the last element first; trying high indices
    # first keeps low indices early in the ordering
    ordering = []
    s = int(masks[-1])
    while s:
        target = best[s]
        for e in range(n - 1, -1, -1):
            if s >> e & 1 and max(best[s ^ (1 << e)], v[s]) == target:
                ordering.append(e)
                s ^= 1 << e
                break
    ordering.reverse()
    return WidthResult(int(best[-1]), tuple(ordering))


def linear_width_bruteforce(sys: ConnectivitySystem, guards: Guards | None = None) -> WidthResult:
    """Reference oracle: every permutation, lexicographically first optimum."""
    guards = guards or default_guards()
    n = sys.n
    if n > guards.max_bruteforce_n:
        raise GuardExceeded("max_bruteforce_n", guards.max_bruteforce_n, n)
    table = sys.values.tolist()
    best_width, best_order = None, None
    for perm in itertools.permutations(range(n)):
        worst, prefix = 0, 0
        for e in perm:
            prefix |= 1 << e
            if table[prefix] > worst:
                worst = table[prefix]
                if best_width is not None and worst >= best_width:
                    break
        else:
            if best_width is None or worst < best_width:
                best_width, best_order = worst, perm
    return WidthResult(best_width, tuple(best_order))


class BudgetExceeded(GuardExceeded):
    pass


def enumerate_families(
    sys: ConnectivitySystem,
    k: int,
    guards: Guards | None = None,
    filter_ih: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[SetFamily]:
    """Yield every subfamily of the k-efficient sets exactly once.

    Family number i contains the j-th efficient set (ascending mask order)
    iff bit j of i is set; ``start``/``stop`` select a block of that range.
    With ``filter_ih`` set, families failing guarded IH are skipped.
    """
    guards = guards or default_guards()
    eff = efficient_sets(sys, k).members
    if len(eff) > guards.max_efficient:
        raise BudgetExceeded("max_efficient", guards.max_efficient, len(eff))
    return _families(sys, k, eff, filter_ih, start, stop)


def _families(sys, k, eff, filter_ih, start, stop):
    stop = 1 << len(eff) if stop is None else stop
    for i in range(start, stop):
        fam = SetFamily(tuple(m for j, m in enumerate(eff) if i >> j & 1))
        if filter_ih and not check_IH(sys, fam, k, IhVariant.GUARDED).holds:
            continue
        yield fam


def count_families(sys: ConnectivitySystem, k: int) -> int:
    return 1 << len(efficient_sets(sys, k))


# ---------------------------------------------------------------------------
# single-ideal existence


class _Conflict(Exception):
    pass


class _IdealSearch:
    """Backtracking over complement pairs of k-efficient sets.

    With IE each pair contributes exactly one side; IW fixes the {empty, X}
    pair. Every other axiom is an implication "P in S => Q in S", which is
    propagated eagerly whenever a set is put in.
    """

    def __init__(self, sys: ConnectivitySystem, k: int, variant: IhVariant):
        self.sys = sys
        self.k = k
        self.guarded = variant is IhVariant.GUARDED
        self.f = sys.lookup
        self.full = sys.full
        self.light = [e for e in range(sys.n) if self.f[1 << e] <= k]
        eff = [m for m in range(sys.size) if self.f[m] <= k]
        pairs = [(m, self.full ^ m) for m in eff if m < self.full ^ m]
        self.pairs = sorted(pairs, key=lambda p: (self.f[p[0]], p[0]))

    def _put_in(self, state: dict, m: int) -> None:
        todo = [m]
        f, k, full = self.f, self.k, self.full
        while todo:
            m = todo.pop()
            if f[m] > k:
                raise _Conflict
            known = state.get(m)
            if known is True:
                continue
            if known is False:
                raise _Conflict
            state[m] = True
            other = full ^ m
            if state.get(other) is True:
                raise _Conflict
            state[other] = False
            for a in submasks(m):
                if a != m and (not self.guarded or f[a] <= k):
                    todo.append(a)
            for e in self.light:
                grown = m | (1 << e)
                if grown != m and f[grown] <= k:
                    todo.append(grown)

    def run(self) -> SetFamily | None:
        if self.f[self.full] > self.k:
            # no k-efficient sets at all; every axiom is vacuous
            return SetFamily()
        state: dict[int, bool] = {}
        try:
            self._put_in(state, 0)  # IW rules out X, so IE puts the empty set in
        except _Conflict:
            return None
        found = self._search(state)
        if found is None:
            return None
        return SetFamily(tuple(m for m, inside in found.items() if inside))

    def _search(self, state: dict) -> dict | None:
        pick = next((p for p in self.pairs if p[0] not in state), None)
        if pick is None:
            return state
        for side in pick:
            trial = dict(state)
            try:
                self._put_in(trial, side)
            except _Conflict:
                continue
            done = self._search(trial)
            if done is not None:
                return done
        return None


def find_single_ideal_with_IE(
    sys: ConnectivitySystem,
    k: int,
    variant: IhVariant | str = IhVariant.GUARDED,
    guards: Guards | None = None,
) -> SetFamily | None:
    """A single ideal of order k+1 satisfying IE, or None if none exists.

    The search is exhaustive, so None is a proof of nonexistence.
    """
    guards = guards or default_guards()
    search = _IdealSearch(sys, k, IhVariant(variant))
    if len(search.pairs) > guards.max_pairs:
        raise BudgetExceeded("max_pairs", guards.max_pairs, len(search.pairs))
    fam = search.run()
    if fam is not None:
        ok, failures = is_single_ideal(sys, fam, k, variant, require_IE=True)
        assert ok, failures
    return fam
