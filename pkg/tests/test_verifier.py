from dataclasses import replace

import pytest

from geograph.admissibility import ParamVector
from geograph.errors import MalformedPlan
from geograph.planner import BetaConfig, Counts, Plan, base_setup, realize
from geograph.verifier import EnumerationSummary, enumerate_box, verify_plan

BASE1 = ParamVector(60, -3, 1, -55, -336)


def _plan(counts=(0, 0, 0, 0, 0), target=BASE1, **kw):
    fields = dict(
        branch="j_positive",
        n=1,
        lam=1,
        K=1,
        beta_config=BetaConfig(),
        counts=Counts(*counts),
        base=BASE1,
        target=target,
    )
    fields.update(kw)
    return Plan(**fields)


def test_base_plan_passes():
    report = verify_plan(_plan())
    assert report.passed and report.recomputed_base == BASE1 and report.mismatches == {}


def test_point_plan_passes():
    report = verify_plan(_plan((1, 0, 0, 0, 0), BASE1 + ParamVector(3, 0, 0, -15, -81)))
    assert report.passed
    assert report.steps[0] == ("x:point", 1, ParamVector(3, 0, 0, -15, -81))


def test_corrupted_target_fails_on_b():
    report = verify_plan(_plan(target=replace(BASE1, b=BASE1.b + 1)))
    assert not report.passed
    assert report.mismatches == {"b": (-336, -335)}


def test_plan_base_is_ignored():
    # a wrong base in the certificate does not change the outcome, only adds a note
    report = verify_plan(_plan(base=ParamVector(0, 0, 1, 0, 0)))
    assert report.passed
    assert any("differs" in note for note in report.errata_notes)


def test_j0_erratum_note():
    plan = realize(base_setup(0).base)
    report = verify_plan(plan)
    assert report.passed
    assert any("(12, -24, -488, -218)" in note for note in report.errata_notes)


@pytest.mark.parametrize(
    "kw",
    [
        dict(branch="j_sideways"),
        dict(branch="j_zero", n=1),
        dict(n=0),
        dict(lam=0),
        dict(K=0),
    ],
)
def test_malformed(kw):
    with pytest.raises(MalformedPlan):
        verify_plan(_plan(**kw))


def test_deterministic():
    plan = realize(ParamVector(6, 0, -2, 1, -3))
    assert verify_plan(plan) == verify_plan(plan)


@pytest.mark.parametrize("j", [-3, -2, -1, 0, 1, 2, 3, 5])
def test_realize_then_verify(j):
    for t in [(0, 0, 0, 0), (3, 0, -15, -81), (-7, 1, 4, 9), (100, -100, 33, -250)]:
        a, m, k, b = t
        target = ParamVector(a, m, j, k, b)
        assert verify_plan(realize(target)).passed


def test_enumerate_single_point():
    s = enumerate_box((0, 0), (0, 0), (0, 0), (0, 0), {0})
    assert (s.realized, s.failed, s.inadmissible_skipped) == (1, 0, 0)


def test_enumerate_small_box():
    s = enumerate_box((-2, 2), (-2, 2), (-2, 2), (-2, 2), {1})
    assert (s.realized, s.failed) == (225, 0)
    assert s.inadmissible_skipped == 625 - 225
    assert s.max_certificate_size > 0


def test_enumerate_empty_box():
    s = enumerate_box((1, 0), (0, 0), (0, 0), (0, 0), {1})
    assert s.as_dict() == EnumerationSummary().as_dict()
    assert enumerate_box((0, 0), (0, 0), (0, 0), (0, 0), set()).realized == 0


def test_enumerate_parallel_matches_serial():
    args = ((-2, 2), (-1, 1), (0, 1), (0, 1), {-1, 0, 2})
    serial = enumerate_box(*args)
    parallel = enumerate_box(*args, parallel=2)
    assert serial.as_dict() == parallel.as_dict()


def test_enumerate_records_failures():
    from geograph.planner import SearchBudget

    # base minus a point needs x = -1 at v = 0, so v_max = 0 cannot reach it
    s = enumerate_box((57, 57), (-3, -3), (-40, -40), (-255, -255), {1}, budget=SearchBudget(1, 0))
    assert s.failed == 1 and s.realized == 0
    assert "SearchExhausted" in s.failures[0][1]
