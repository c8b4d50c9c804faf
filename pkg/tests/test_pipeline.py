import pytest

from core.constructions import get_construction
from core.pipeline.checks import (
    ALL_STEPS,
    CORE_STEPS,
    STEP_ORDER,
    CheckPipeline,
    parse_steps,
    run_pipeline,
)


def _by_check(report):
    return {step.check: step for step in report.steps}


@pytest.mark.parametrize("fixture", ["pauli2", "pauli3"])
def test_pauli_passes_every_core_step(fixture, request):
    construction = request.getfixturevalue(fixture)
    report = run_pipeline(construction.decomposition, source=construction.slug)
    assert [step.check for step in report.steps] == CORE_STEPS
    assert report.passed, [s.check for s in report.steps if not s.passed]
    assert report.exit_code == 0
    steps = _by_check(report)
    assert steps["witness"].certificate["attempt"] == 0
    assert steps["reconstruct-group"].certificate["order"] == construction.decomposition.m


def test_all_steps_on_pauli(pauli2):
    report = run_pipeline(pauli2.decomposition, steps=ALL_STEPS)
    steps = _by_check(report)
    assert report.passed
    assert steps["semisimple-set-grading"].certificate["n"] == [2]
    assert steps["necessary-condition"].passed
    assert steps["matrix-rows"].passed


def test_non_realizable_fails_minimality_and_realizability(non_realizable):
    report = run_pipeline(non_realizable.decomposition, seed=0)
    steps = _by_check(report)
    assert report.exit_code == 1
    assert not steps["minimality"].passed
    assert steps["set-grading"].passed
    assert not steps["realizability"].passed
    assert steps["realizability"].certificate["verdict"] == "cancellation"
    assert steps["witness"].passed
    assert not steps["reconstruct-group"].passed


def test_minimal_non_set_grading_fails_set_grading_only(minimal_non_set):
    report = run_pipeline(minimal_non_set.decomposition)
    steps = _by_check(report)
    assert steps["minimality"].passed
    assert steps["bahturin-regev"].passed
    failing = steps["set-grading"]
    assert not failing.passed
    assert failing.certificate["pair"] == ["(0,1)", "(0,1)"]
    assert failing.certificate["components"] == ["(0,0)", "(0,2)"]
    assert steps["realizability"].status == "skipped"
    assert steps["realizability"].passed


def test_grassmann_definitive_search_refutes_regularity(grassmann3):
    sampled = run_pipeline(grassmann3.decomposition, steps=["witness"], budget=4)
    assert _by_check(sampled)["witness"].status == "inconclusive"
    assert sampled.exit_code == 1
    report = run_pipeline(grassmann3.decomposition, budget=4, definitive=True)
    steps = _by_check(report)
    assert steps["witness"].status == "fail"
    assert steps["qc-relations"].notes
    assert steps["minimality"].passed
    assert steps["reconstruct-group"].status == "skipped"


def test_unconstrained_theta_skips_matrix_steps():
    construction = get_construction("nilpotent-z2")
    report = run_pipeline(construction.decomposition, steps=["minimality", "determinant"])
    steps = _by_check(report)
    assert steps["minimality"].status == "skipped"
    assert not steps["minimality"].passed


def test_prerequisites_run_without_report_entries(pauli2):
    report = run_pipeline(pauli2.decomposition, steps=["reconstruct-group", "minimality"])
    assert [step.check for step in report.steps] == ["minimality", "reconstruct-group"]
    assert report.passed


def test_detect_theta_failure_skips_dependent_steps():
    construction = get_construction("group-algebra", group="s3")
    report = run_pipeline(construction.decomposition, steps=["detect-theta", "minimality"])
    steps = _by_check(report)
    assert not steps["detect-theta"].passed
    assert steps["detect-theta"].certificate["kind"] == "NotScalarMultiple"
    assert steps["minimality"].status == "skipped"


def test_algebra_axioms_step(pauli2):
    report = run_pipeline(pauli2.decomposition, steps=["algebra-axioms"])
    assert report.passed


def test_parse_steps():
    assert parse_steps() == CORE_STEPS
    assert parse_steps(all_steps=True) == ALL_STEPS
    assert parse_steps(steps="minimality, witness") == ["minimality", "witness"]
    assert "witness" not in parse_steps(skip="witness")
    with pytest.raises(KeyError):
        parse_steps(steps="bogus")
    with pytest.raises(KeyError):
        parse_steps(skip="bogus")
    with pytest.raises(KeyError):
        CheckPipeline(["bogus"])
    assert CheckPipeline(["witness", "algebra-axioms"]).steps == ["algebra-axioms", "witness"]
    assert STEP_ORDER[0] == "algebra-axioms"


def test_reports_are_deterministic(pauli2):
    first = run_pipeline(pauli2.decomposition, seed=3).to_json_dict()
    second = run_pipeline(pauli2.decomposition, seed=3).to_json_dict()
    assert first == second
    assert first["seed"] == 3


def test_seed_defaults_to_settings(monkeypatch, pauli2):
    monkeypatch.setenv("QCREG_SEED", "11")
    report = run_pipeline(pauli2.decomposition, steps=["minimality"])
    assert report.seed == 11
