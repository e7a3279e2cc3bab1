from borderings.domains import Integers
from borderings.extnat import INF
from borderings.ideals import factor_ideal
from borderings.sweeps import (
    INSTANCE_CHECKS,
    Instance,
    fp_instances,
    integrality_violations,
    minimize,
    run_instance_suite,
    run_property_c,
    run_s_inclusion_search,
    standard_sweep,
    superadditivity_violations,
    z_instances,
)

Z = Integers()


def test_sweeps_are_seeded():
    assert z_instances(20, 7) == z_instances(20, 7)
    assert z_instances(20, 7) != z_instances(20, 8)
    assert len(standard_sweep(1, 10, 4)) == 14


def test_instance_ranges():
    for inst in z_instances(200, 42):
        assert 1 <= len(inst.S) <= 8
        assert all(-60 <= x <= 60 for x in inst.S)
        assert inst.h in (1, 2, 3, INF) and inst.r in (0, 1, 2)
    for inst in fp_instances(50, 43):
        assert all(x.degree <= 3 for x in inst.S)


def test_violation_finders():
    assert superadditivity_violations([0, 1, 1, 2]) == [(1, 1)]
    assert superadditivity_violations([0, 0, 1, 1, 3]) == []
    bad = integrality_violations([0, 2, 1])
    assert bad["gamma"] == [2]
    assert (2, 1) in bad["binomial"]


def test_minimize_shrinks_witness():
    def check(inst):
        ok = not {0, 1} <= set(inst.S)
        return ok, {}

    inst = Instance(Z, (5, 0, 9, 1, 7), factor_ideal(Z, 2))
    assert minimize(inst, check).S == (0, 1)


def test_failure_reports_minimized_witness(monkeypatch):
    def check(inst):
        return 3 not in inst.S, {}

    monkeypatch.setitem(INSTANCE_CHECKS, "well-definedness", check)
    trials = run_instance_suite("well-definedness", [Instance(Z, (1, 2, 3, 4), factor_ideal(Z, 2))])
    assert not trials[0].passed
    assert trials[0].detail["minimized"]["set"] == ["3"]


def test_workers_preserve_order():
    insts = standard_sweep(5, 12, 4)
    serial = run_instance_suite("superadditivity", insts)
    parallel = run_instance_suite("superadditivity", insts, workers=2)
    assert [(t.index, t.passed, t.detail) for t in serial] == [(t.index, t.passed, t.detail) for t in parallel]


def test_every_suite_passes_small_sweep():
    insts = standard_sweep(11, 15, 5)
    for suite in INSTANCE_CHECKS:
        assert all(t.passed for t in run_instance_suite(suite, insts)), suite


def test_property_c_runner():
    trials = run_property_c(10, 3)
    assert len(trials) == 140
    assert all(t.passed for t in trials)


def test_s_inclusion_runner():
    trials = run_s_inclusion_search(20, 3, h=2, r=1)
    assert len(trials) == 20
    assert all("violations" in t.detail for t in trials)
