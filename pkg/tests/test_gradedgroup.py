import pytest

from core.constructions import get_construction
from core.decomp.decomposition import detect_theta
from core.decomp.witness import find_witness
from core.exactnum import Cyclotomic, make_root
from core.gradedgroup.cocycles import (
    Cocycle,
    CocycleViolation,
    check_bicharacter,
    check_skew_symmetric,
    coboundary,
    cohomologous_abelian,
    heisenberg_cocycle,
    induced_bicharacter,
    is_nondegenerate,
    pauli_bicharacter,
    ray_classes,
    require_cocycle,
    tabulate,
    trivial_cocycle,
    validate_cocycle,
)
from core.gradedgroup.groups import (
    CayleyTable,
    InvalidTableError,
    NotAGroup,
    abelian_group,
    classify_abelian,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    group_table_defect,
    invariant_factors_of,
    is_abelian,
    klein_four,
    quaternion_group,
    symmetric_group_3,
    validate_table,
)
from core.gradedgroup.reconstruct import (
    ReconstructionNotApplicable,
    reconstruct_group,
    reconstruct_group_check,
    semisimple_set_grading_check,
)
from core.gradedgroup.setgrading import (
    NotASetGrading,
    SetGradingTable,
    cancellation_violations,
    first_associativity_violation,
    realizability_check,
    set_grading_detect,
)
from core.gradedgroup.twisted import twisted_center_prediction


def test_standard_groups_are_groups():
    for group in (cyclic_group(5), klein_four(), quaternion_group(), symmetric_group_3()):
        validate_table(group)
        assert group_table_defect(group.m, group.table) is None
    assert is_abelian(klein_four())
    assert not is_abelian(quaternion_group())
    assert len(conjugacy_classes(symmetric_group_3())) == 3
    assert len(conjugacy_classes(quaternion_group())) == 5


def test_group_table_defects_are_named():
    assert group_table_defect(2, [[0, 1], [1, 1]]) == "row 1 repeats an entry"
    assert group_table_defect(2, [[0, 2], [1, 0]]) == "entry out of range"
    assert group_table_defect(3, [[0, 2, 1], [2, 1, 0], [1, 0, 2]]) == "no identity element"
    with pytest.raises(InvalidTableError):
        validate_table(CayleyTable(3, ((0, 1, 2), (1, 1, 0), (2, 0, 1))))


def test_abelian_classification():
    assert classify_abelian(abelian_group([2, 4])).invariant_factors == (2, 4)
    assert classify_abelian(direct_product(cyclic_group(2), cyclic_group(3))).invariant_factors == (6,)
    assert classify_abelian(abelian_group([2, 2, 4])).invariant_factors == (2, 2, 4)
    assert invariant_factors_of([4, 6]).invariant_factors == (2, 12)
    assert str(invariant_factors_of([2, 2])) == "Z2 x Z2"
    with pytest.raises(NotAGroup):
        classify_abelian(symmetric_group_3())


def test_group_limit_comes_from_settings(monkeypatch):
    monkeypatch.setenv("QCREG_MAX_GROUP_ORDER", "4")
    with pytest.raises(InvalidTableError):
        validate_table(cyclic_group(5))


def test_cocycles_and_bicharacters():
    alpha = heisenberg_cocycle(3)
    assert validate_cocycle(alpha).passed
    beta = induced_bicharacter(alpha)
    assert check_bicharacter(beta).passed
    assert check_skew_symmetric(beta).passed
    assert is_nondegenerate(beta)
    assert not is_nondegenerate(induced_bicharacter(trivial_cocycle(klein_four())))
    pauli = pauli_bicharacter(2)
    assert check_bicharacter(pauli).passed and is_nondegenerate(pauli)


def test_coboundaries_are_cohomologically_trivial():
    group = cyclic_group(4)
    eta = [make_root(4, g) + 2 for g in range(4)]
    alpha = coboundary(group, eta)
    require_cocycle(alpha)
    assert cohomologous_abelian(alpha, trivial_cocycle(group))
    assert not cohomologous_abelian(heisenberg_cocycle(2), trivial_cocycle(klein_four()))


def test_non_cocycle_is_rejected():
    group = cyclic_group(2)
    alpha = Cocycle(group, tabulate(group, lambda g, h: Cyclotomic.from_int(2 if (g, h) == (1, 1) else 1)))
    assert validate_cocycle(alpha).passed
    broken = Cocycle(group, tabulate(group, lambda g, h: Cyclotomic.from_int(2 if (g, h) == (0, 1) else 1)))
    assert not validate_cocycle(broken).passed
    with pytest.raises(CocycleViolation):
        require_cocycle(broken)


def test_twisted_center_matches_ray_classes():
    report = twisted_center_prediction(heisenberg_cocycle(2))
    assert report.passed
    assert report.certificate["predicted"] == 1
    assert report.certificate["simple"]
    untwisted = twisted_center_prediction(trivial_cocycle(symmetric_group_3()))
    assert untwisted.passed
    assert untwisted.certificate["center_dim"] == 3
    assert len(ray_classes(trivial_cocycle(quaternion_group()))) == 5


def test_pauli_is_a_realizable_set_grading(pauli2):
    table = set_grading_detect(pauli2.decomposition)
    assert table.is_total
    assert cancellation_violations(table) == []
    assert first_associativity_violation(table) is None
    report = realizability_check(table)
    assert report.passed
    assert report.certificate["verdict"] == "realizable"
    assert report.certificate["invariant_factors"] == [2, 2]
    assert report.certificate["identity"] == 1


def test_minimal_non_set_grading_is_detected(minimal_non_set):
    decomposition = minimal_non_set.decomposition
    with pytest.raises(NotASetGrading) as excinfo:
        set_grading_detect(decomposition)
    error = excinfo.value
    assert (decomposition.label(error.i), decomposition.label(error.j)) == ("(0,1)", "(0,1)")
    assert [decomposition.label(c) for c in error.components] == ["(0,0)", "(0,2)"]


def test_minimal_non_set_grading_theta_is_minimal(minimal_non_set):
    table = detect_theta(minimal_non_set.decomposition)
    assert table.entries == minimal_non_set.expected_theta.entries


def test_non_realizable_set_grading_fails_cancellation(non_realizable):
    table = set_grading_detect(non_realizable.decomposition)
    assert table.is_total
    report = realizability_check(table)
    assert not report.passed
    assert report.certificate["verdict"] == "cancellation"
    positions = [v["positions"] for v in report.certificate["violations"]]
    assert [1, 2, 4] in positions


def test_partial_set_grading_only_checks_necessary_conditions():
    table = SetGradingTable(((0, 1), (1, None)), ("1", "u"))
    assert not table.is_total
    report = realizability_check(table)
    assert report.passed
    assert report.certificate["verdict"] == "necessary-conditions-hold"
    assert report.notes


def test_associativity_failure_is_reported():
    table = SetGradingTable(((0, 1, 2), (1, 0, 1), (2, 1, 0)))
    assert cancellation_violations(table)
    f = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert first_associativity_violation(SetGradingTable(f)) is None
    loop = SetGradingTable(
        (
            (0, 1, 2, 3, 4),
            (1, 0, 3, 4, 2),
            (2, 4, 0, 1, 3),
            (3, 2, 4, 0, 1),
            (4, 3, 1, 2, 0),
        )
    )
    assert cancellation_violations(loop) == []
    report = realizability_check(loop)
    assert not report.passed
    assert report.certificate["verdict"] == "associativity"


def test_reconstruct_pauli_group(pauli2):
    group = reconstruct_group(pauli2.decomposition, pauli2.expected_theta)
    assert classify_abelian(group).invariant_factors == (2, 2)
    report = reconstruct_group_check(pauli2.decomposition, pauli2.expected_theta)
    assert report.passed
    assert report.certificate["order"] == 4
    assert report.certificate["center_dim"] == 1


def test_reconstruct_twisted_group():
    construction = get_construction("twisted", n=3)
    table = detect_theta(construction.decomposition)
    witness = find_witness(construction.decomposition, table)
    report = reconstruct_group_check(construction.decomposition, table, witness)
    assert report.passed
    assert report.certificate["invariant_factors"] == [3, 3]


def test_reconstruction_refuses_non_minimal_tables(non_realizable):
    table = detect_theta(non_realizable.decomposition)
    report = reconstruct_group_check(non_realizable.decomposition, table)
    assert not report.passed
    with pytest.raises(NotAGroup):
        reconstruct_group(non_realizable.decomposition, table, force=True)


def test_reconstruction_not_applicable_to_multidimensional_components(grassmann3):
    table = detect_theta(grassmann3.decomposition)
    with pytest.raises(ReconstructionNotApplicable):
        reconstruct_group(grassmann3.decomposition, table)
    report = reconstruct_group_check(grassmann3.decomposition, table)
    assert report.status == "skipped" and report.passed


def test_semisimple_set_grading_on_pauli_and_kronecker(pauli2, kronecker24):
    for construction, n in ((pauli2, [2]), (kronecker24, [2, 2])):
        decomposition = construction.decomposition
        table = detect_theta(decomposition)
        witness = find_witness(decomposition, table)
        report = semisimple_set_grading_check(decomposition, table, witness)
        assert report.passed, report.certificate
        assert report.certificate["n"] == n


def test_semisimple_set_grading_is_vacuous_off_its_hypotheses(minimal_non_set, grassmann3):
    decomposition = minimal_non_set.decomposition
    table = detect_theta(decomposition)
    witness = find_witness(decomposition, table)
    report = semisimple_set_grading_check(decomposition, table, witness)
    assert report.status == "skipped" and report.passed
    grassmann_table = detect_theta(grassmann3.decomposition)
    skipped = semisimple_set_grading_check(grassmann3.decomposition, grassmann_table, None)
    assert skipped.status == "skipped"
