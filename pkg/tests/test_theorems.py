"""Counting theorems: twist-orbit sums, species counts, report objects.

Species counts at the (2, 1)-weighted edge were frozen from
tools/oracle_species.py, which classifies bimodule maps directly by a
two-sided base-change orbit walk instead of going through the unfolded
quiver.
"""

import pytest

import quiverfold as qf
from quiverfold.errors import BudgetExceeded, CharacteristicWarning, NotFixed


@pytest.fixture
def pair21():
    return qf.make_valued_quiver(["u", "v"], [2, 1], [("u", "v", 2)])


def test_ii_classes_full_line(a3_flip, F2):
    q, flip = a3_flip
    classes = qf.ii_classes(flip, (1, 1, 1), F2)
    assert len(classes) == 1
    c = classes[0]
    assert c.period == 1
    assert c.summand_count == 1
    assert c.member_dims == ((1, 1, 1),)
    assert c.direct
    rep = c.representative()
    assert rep.dims == (1, 1, 1)
    assert qf.is_indecomposable(rep)


def test_ii_classes_period_two(a3_flip, F2):
    q, flip = a3_flip
    classes = qf.ii_classes(flip, (1, 2, 1), F2)
    assert len(classes) == 1
    c = classes[0]
    assert c.period == 2
    assert sorted(c.member_dims) == [(0, 1, 1), (1, 1, 0)]
    rep = c.representative()
    assert rep.dims == (1, 2, 1)
    assert not qf.is_indecomposable(rep)
    parts = qf.decompose(rep)
    assert sorted(p.dims for p in parts) == [(0, 1, 1), (1, 1, 0)]


def test_ii_classes_requires_fixed_vector(a3_flip, F2):
    q, flip = a3_flip
    with pytest.raises(NotFixed):
        qf.ii_classes(flip, (1, 1, 0), F2)
    assert qf.ii_classes(flip, (0, 0, 0), F2) == ()


def test_ii_classes_counterexample(counterexample, F5):
    q, rot = counterexample
    classes = qf.ii_classes(rot, (1, 1, 1, 1, 1), F5)
    assert len(classes) == 1
    c = classes[0]
    assert c.period == 1
    assert c.member_dims == ((1, 1, 1, 1, 1),)
    rep = c.representative()
    assert qf.is_indecomposable(rep)
    assert qf.is_isomorphic(qf.twist_auto(rot, rep), rep)


def test_ii_classes_reduction_matches_direct(a3_flip, F2):
    q, flip = a3_flip
    free = qf.ii_classes(flip, (1, 2, 1), F2)
    tight = qf.ii_classes(flip, (1, 2, 1), F2, state_cap=8)
    assert len(tight) == len(free) == 1
    assert tight[0].period == free[0].period
    assert sorted(tight[0].member_dims) == sorted(free[0].member_dims)


def test_ii_classes_unmaterialised_base(a3_flip, F2):
    q, flip = a3_flip
    classes = qf.ii_classes(flip, (1, 2, 1), F2, state_cap=1)
    assert len(classes) == 1
    c = classes[0]
    assert c.period == 2
    assert not c.direct
    with pytest.raises(BudgetExceeded):
        c.base_representation()


def test_ii_classes_refuses_irreducible_blowup(counterexample, F5):
    q, rot = counterexample
    with pytest.raises(BudgetExceeded) as ei:
        qf.ii_classes(rot, (1, 1, 1, 1, 1), F5, state_cap=100)
    assert ei.value.predicted is not None
    assert ei.value.predicted > 100


def test_species_count_frozen_values(pair21):
    frozen = {
        (1, 0): 1,
        (0, 1): 1,
        (2, 0): 0,
        (0, 2): 0,
        (1, 1): 1,
        (2, 1): 0,
        (1, 2): 1,
        (2, 2): 0,
        (1, 3): 0,
    }
    for alpha, want in frozen.items():
        assert qf.species_count(pair21, alpha, 2) == want, alpha


def test_species_count_field_spec_forms(pair21):
    assert qf.species_count(pair21, (1, 1), "2") == 1
    assert qf.species_count(pair21, (1, 1), 3) == 1
    with pytest.raises(ValueError):
        qf.species_count(pair21, (1, 1), 6)


def test_species_count_budget():
    # the (4, 1)-weighted edge unfolds to the four-pointed star; at the
    # null root no orbit reflection lowers the height, so the oversized
    # state space is refused rather than sampled
    vq = qf.make_valued_quiver(["u", "v"], [4, 1], [("u", "v", 4)])
    with pytest.raises(BudgetExceeded) as ei:
        qf.species_count(vq, (1, 2), 2)
    assert ei.value.predicted == 16**8


def test_verify_kac_a2(a2, F2):
    report = qf.verify_kac(a2, F2, 3)
    assert report.passed
    assert report.title == "kac dimension-vector check"
    assert report.field_spec == "2"
    counts = {r.vector: r.count for r in report.records}
    assert counts == {(1, 0): 1, (0, 1): 1, (1, 1): 1}
    assert report.lines()[0] == "kac dimension-vector check: field 2, height 3"
    assert report.lines()[-1] == "PASS"


def test_verify_main_small(a3_flip, F2):
    q, flip = a3_flip
    with pytest.warns(CharacteristicWarning):
        report = qf.verify_main_theorem(flip, F2, 2)
    assert report.passed
    rows = {r.vector: r for r in report.records}
    assert set(rows) == {(0, 1), (1, 0), (1, 1)}
    assert rows[(1, 0)].periods == (2,)
    assert rows[(1, 0)].expected_length == 2
    assert rows[(0, 1)].periods == (1,)
    assert rows[(1, 1)].periods == (1,)
    assert rows[(1, 1)].expected_length == 1


def test_verify_main_counterexample_slice(counterexample, F5):
    q, rot = counterexample
    report = qf.verify_main_theorem(rot, F5, 2)
    assert report.passed
    rows = {r.vector: r for r in report.records}
    assert rows[(1, 0)].kind == "real"
    assert rows[(1, 0)].periods == (3,)
    assert rows[(0, 1)].periods == (2,)
    assert rows[(1, 1)].kind == "imaginary"
    assert rows[(1, 1)].periods == (1,)
    assert rows[(1, 1)].expected_length is None


def test_verify_species_smoke(pair21):
    report = qf.verify_species_theorem(pair21, 2, 2)
    assert report.passed
    assert report.field_spec == "2"
    rows = {r.vector: r for r in report.records}
    assert rows[(1, 1)].count == 1
    assert (2, 2) not in rows


def test_multiset_crosscheck(a2, F2):
    report = qf.multiset_crosscheck(a2, F2, 4)
    assert report.passed
    rows = {r.vector: r for r in report.records}
    assert rows[(1, 1)].count == 2
    assert rows[(1, 1)].crosscheck == 2
    assert rows[(2, 2)].count == 3
    assert rows[(2, 2)].crosscheck == 3
    assert "multisets=3" in report.lines()[1 + list(rows).index((2, 2))]


def test_report_round_trip(a2, F2):
    report = qf.verify_kac(a2, F2, 2)
    doc = report.to_dict()
    assert doc["passed"] is True
    assert doc["title"] == report.title
    assert doc["field"] == "2"
    assert doc["height"] == 2
    assert len(doc["records"]) == len(report.records)
    assert doc["records"][0]["vector"] == list(report.records[0].vector)
