"""Reference evaluators for both axiom systems.

Deliberately written without any of the mask machinery used by
:mod:`connwidth.families`: sets are ``frozenset`` objects, every axiom is a
direct loop over its quantifiers, and nothing is pruned. The only thing
read from the system is its raw value table.
"""

from __future__ import annotations

from itertools import combinations


class SlowEvaluator:
    def __init__(self, n: int, table, k: int, literal_ih: bool):
        self.n = n
        self.k = k
        self.literal_ih = literal_ih
        self.ground = frozenset(range(n))
        self.table = [int(x) for x in table]
        self.all_sets = [frozenset(c) for r in range(n + 1) for c in combinations(range(n), r)]
        self.small_sets = [s for s in self.all_sets if len(s) <= 1]
        # O3 antecedent does not depend on the family: every (A, B, C) with
        # A, B disjoint, |C| <= 1, A | B | C = X and both sides k-efficient.
        # C may overlap A or B here.
        pairs = set()
        for a in self.all_sets:
            if self.f(a) > k:
                continue
            for b in self.all_sets:
                if a & b or self.f(b) > k:
                    continue
                if any(a | b | c == self.ground for c in self.small_sets):
                    pairs.add((a, b))
        self.o3_pairs = sorted(pairs, key=lambda p: (sorted(p[0]), sorted(p[1])))

    def f(self, s: frozenset) -> int:
        index = 0
        for e in s:
            index += 2 ** e
        return self.table[index]

    def family(self, masks) -> frozenset:
        out = set()
        for m in masks:
            out.add(frozenset(e for e in range(self.n) if (m // 2 ** e) % 2 == 1))
        return frozenset(out)

    # single ideal -------------------------------------------------------

    def ib(self, fam) -> bool:
        return all(self.f(a) <= self.k for a in fam)

    def ih(self, fam) -> bool:
        for b in fam:
            for a in self.all_sets:
                if a < b and a not in fam:
                    if self.literal_ih or self.f(a) <= self.k:
                        return False
        return True

    def sis(self, fam) -> bool:
        for a in fam:
            for e in range(self.n):
                grown = a | {e}
                if self.f(frozenset([e])) <= self.k and self.f(grown) <= self.k and grown not in fam:
                    return False
        return True

    def iw(self, fam) -> bool:
        return self.ground not in fam

    def ie(self, fam) -> bool:
        for a in self.all_sets:
            if self.f(a) <= self.k:
                if (a in fam) + ((self.ground - a) in fam) != 1:
                    return False
        return True

    def single_ideal_ie(self, fam) -> bool:
        return self.ib(fam) and self.ih(fam) and self.sis(fam) and self.iw(fam) and self.ie(fam)

    # linear obstacle ----------------------------------------------------

    def o1(self, fam) -> bool:
        for a in fam:
            if not self.f(a) <= self.k:
                return False
        return True

    def o2(self, fam) -> bool:
        for b in fam:
            for a in self.all_sets:
                if a <= b and self.f(a) <= self.k and a not in fam:
                    return False
        return True

    def o3(self, fam) -> bool:
        for a, b in self.o3_pairs:
            if a not in fam and b not in fam:
                return False
        return True

    def linear_obstacle(self, fam) -> bool:
        return self.o1(fam) and self.o2(fam) and self.o3(fam)

    def verdicts(self, masks) -> tuple[bool, bool]:
        fam = self.family(masks)
        return self.single_ideal_ie(fam), self.linear_obstacle(fam)
