import json

import pytest

from connwidth import (
    AxiomId,
    AxiomReport,
    Guards,
    IhVariant,
    SetFamily,
    check_lemma1,
    duality_check,
    make_explicit,
    precondition_singletons,
    theorem1_crosscheck,
)
from connwidth.slowpath import SlowEvaluator
from connwidth.verify import witness_reproduces


def test_lemma1_examples(p3, k4):
    for s in (p3, k4):
        rep = check_lemma1(s)
        assert rep.outcome == "confirmed"
        assert [r.axiom for r in rep.reports] == [AxiomId.L1a, AxiomId.L1b]
    assert check_lemma1(p3).counts == {"sets": 8, "pairs": 64}


def test_lemma1_flags_corrupted_table():
    s = make_explicit(2, [0, 1, 1, 1], validate=False)
    rep = check_lemma1(s)
    assert rep.outcome == "mismatch"
    l1a = rep.reports[0]
    assert not l1a.holds and l1a.witnesses == (0b11,)
    assert witness_reproduces(s, None, None, l1a)


def test_lemma1_second_inequality_witness():
    # symmetric with f(empty) minimal, but {0,1} and {2} are inflated
    s = make_explicit(2, [0, 0, 0, 0], validate=False)
    assert check_lemma1(s).outcome == "confirmed"
    s = make_explicit(3, [0, 1, 1, 5, 5, 1, 1, 0], validate=False)
    rep = check_lemma1(s)
    l1b = [r for r in rep.reports if r.axiom is AxiomId.L1b][0]
    assert not l1b.holds
    assert witness_reproduces(s, None, None, l1b)


def test_precondition(k4, p3):
    assert precondition_singletons(k4, 3).holds
    rep = precondition_singletons(p3, 1)
    assert not rep.holds and rep.element == 1
    assert precondition_singletons(p3, 10).holds


def test_theorem1_k4(k4):
    rep = theorem1_crosscheck(k4, 3, IhVariant.GUARDED, slow_path="all")
    assert rep.counts["families"] == 1024
    assert rep.counts["efficient_sets"] == 10
    assert rep.counts["forward_mismatches"] == 0
    assert rep.counts["disagreements"] == 0
    listed = [m["family"] for m in rep.mismatches]
    assert [0, 1, 2, 4, 8] not in listed  # the known ideal is also an obstacle


def test_theorem1_p3_family_x_consistent(p3):
    rep = theorem1_crosscheck(p3, 2, IhVariant.GUARDED)
    assert [p3.full] not in [m["family"] for m in rep.mismatches]


def test_theorem1_precondition_failed(p3):
    rep = theorem1_crosscheck(p3, 0)
    assert rep.outcome == "precondition_failed"
    assert rep.counts["families"] == 4


def test_theorem1_budget(k4):
    rep = theorem1_crosscheck(k4, 3, guards=Guards(max_efficient=4))
    assert rep.outcome == "budget_exceeded"
    assert rep.counts["efficient_sets"] == 10


def test_mismatch_records_are_sound(named_systems):
    s = named_systems["C4-cut"]
    rep = theorem1_crosscheck(s, 2, IhVariant.LITERAL, guards=Guards(max_mismatches=10))
    assert len(rep.mismatches) == 10 < rep.counts["mismatches"]
    slow = SlowEvaluator(s.n, s.values, 2, literal_ih=True)
    for m in rep.mismatches:
        p1, p2 = slow.verdicts(m["family"])
        assert p1 != p2
        assert m["single_ideal"]["holds"] == p1 and m["linear_obstacle"]["holds"] == p2
        family = SetFamily.of(m["family"])
        for side in ("single_ideal", "linear_obstacle"):
            for r in m[side]["reports"]:
                assert witness_reproduces(s, family, 2, AxiomReport.from_json(r), IhVariant.LITERAL)


def test_theorem1_jobs_match_sequential(named_systems):
    s = named_systems["K4-cut"]
    one = theorem1_crosscheck(s, 3, slow_path="all")
    two = theorem1_crosscheck(s, 3, slow_path="all", jobs=3)
    assert json.dumps(one.to_json()) == json.dumps(two.to_json())


def test_duality_examples(k4, p3, c4):
    rep = duality_check(k4, 3)
    assert rep.outcome == "confirmed" and rep.lw == 4 and rep.exists_ideal
    assert rep.witness_family == [0, 1, 2, 4, 8]
    rep = duality_check(p3, 2)
    assert rep.outcome == "confirmed" and rep.lw == 1 and not rep.exists_ideal
    assert rep.witness_ordering == [0, 1, 2]
    rep = duality_check(c4, 2)
    assert rep.outcome == "confirmed" and rep.lw == 2 and not rep.exists_ideal
    assert "axiom (S4) read as (IE)" in rep.notes


def test_duality_without_precondition_is_flagged(p3):
    # f({1}) = 2 > 1: an ideal {empty, {0}, {2}} with IE exists while lw = 1
    rep = duality_check(p3, 1)
    assert rep.outcome == "precondition_failed"
    assert rep.exists_ideal and rep.lw == 1
    assert rep.counts["claim_holds"] is False


def test_duality_budget(k4):
    rep = duality_check(k4, 3, guards=Guards(max_pairs=1))
    assert rep.outcome == "budget_exceeded"


@pytest.mark.parametrize("variant", list(IhVariant))
def test_harnesses_deterministic(named_systems, variant):
    s = named_systems["S3-boundary"]
    a = theorem1_crosscheck(s, 1, variant).to_json()
    b = theorem1_crosscheck(s, 1, variant).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert json.dumps(duality_check(s, 1, variant).to_json()) == json.dumps(duality_check(s, 1, variant).to_json())


def test_slow_path_o3_accepts_overlapping_c(p3):
    # literal reading: C may overlap A or B; the trigger set must match the
    # minimal-C sweep
    from connwidth.families import _o3_triggers
    for k in range(0, 3):
        slow = SlowEvaluator(p3.n, p3.values, k, literal_ih=False)
        fast = {(a, b) for a, b, _ in _o3_triggers(p3, k)}
        as_masks = {(sum(1 << e for e in a), sum(1 << e for e in b)) for a, b in slow.o3_pairs}
        assert as_masks == fast
