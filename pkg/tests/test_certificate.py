import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geograph import certificate
from geograph.admissibility import ParamVector
from geograph.errors import MalformedPlan
from geograph.planner import BetaConfig, realize


@pytest.fixture(scope="module")
def plan():
    return realize(ParamVector(63, -6, 1, -70, -417))


def test_round_trip(plan, tmp_path):
    assert certificate.loads(certificate.dumps(plan)) == plan
    path = tmp_path / "plan.json"
    certificate.save(plan, path)
    assert certificate.load(path) == plan


def test_canonical_layout(plan):
    d = json.loads(certificate.dumps(plan))
    assert set(d) == {
        "format_version", "branch", "n", "lambda", "K", "beta_config", "counts",
        "base", "target", "target_chern", "geometric_disclaimer", "errata_applied",
    }
    assert d["counts"] == {"x": "45", "y": "12", "z": "61", "u": "2", "v": "2"}
    assert d["target_chern"]["c4"] == "63"
    assert d["geometric_disclaimer"] is True
    # canonical: re-dumping the parsed plan reproduces the bytes
    assert certificate.dumps(certificate.loads(certificate.dumps(plan))) == certificate.dumps(plan)


def test_big_integers_survive(plan):
    from dataclasses import replace

    big = replace(plan, target=ParamVector(3 * 2**100, 0, 1, -(2**90), 7))
    d = json.loads(certificate.dumps(big))
    assert d["target"]["a"] == str(3 * 2**100)
    assert certificate.loads(certificate.dumps(big)).target == big.target


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("counts"),
        lambda d: d.__setitem__("format_version", "99"),
        lambda d: d["counts"].__setitem__("x", "-1"),
        lambda d: d["counts"].__setitem__("x", "1.5"),
        lambda d: d["counts"].__setitem__("x", True),
        lambda d: d["beta_config"].__setitem__("beta_sq", "0"),
        lambda d: d["target_chern"].__setitem__("c4", "64"),
        lambda d: d["target"].pop("b"),
    ],
)
def test_rejects_malformed(plan, mutate):
    d = json.loads(certificate.dumps(plan))
    mutate(d)
    with pytest.raises(MalformedPlan):
        certificate.plan_from_dict(d)


def test_rejects_non_json():
    with pytest.raises(MalformedPlan):
        certificate.loads("{not json")
    with pytest.raises(MalformedPlan):
        certificate.loads("[1, 2]")


@settings(max_examples=30, deadline=None)
@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-3, 3), st.integers(-20, 20), st.integers(-20, 20),
       st.integers(1, 4))
def test_round_trip_random(a, m, j, k, b, bsq):
    m -= (a + m) % 3
    p = realize(ParamVector(a, m, j, k, b), beta=BetaConfig(beta_sq=bsq))
    assert certificate.loads(certificate.dumps(p)) == p
