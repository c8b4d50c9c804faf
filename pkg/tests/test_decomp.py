import pytest

from core.algebra.constructors import element_from_matrix, matrix_algebra, matrix_from_element
from core.algebra.structure import is_invertible, is_nilpotent, multiply_chain
from core.constructions import get_construction
from core.decomp import witness as witness_module
from core.decomp.criteria import (
    UnconstrainedEntries,
    bahturin_regev_check,
    determinant_check,
    distinct_row_count,
    even_subgroup,
    is_minimal,
    matrix_rows_check,
    minimality_check,
    msquared_check,
    necessary_condition_check,
    qc_relations_check,
    root_order_bound,
    root_order_check,
    theta_determinant,
)
from core.decomp.decomposition import (
    Decomposition,
    NotScalarMultiple,
    OneSidedZero,
    ThetaTable,
    check_direct_sum,
    detect_theta,
)
from core.decomp.witness import (
    FOUND,
    INCONCLUSIVE,
    REFUTED,
    central_invertibility_check,
    find_witness,
    tuple_product_check,
    witness_report,
)
from core.exactnum import Cyclotomic
from core.gradedgroup.groups import classify_abelian
from core.gradedgroup.reconstruct import reconstruct_group


def test_pauli_theta_matches_bicharacter(pauli2, pauli3):
    for construction in (pauli2, pauli3):
        assert check_direct_sum(construction.decomposition)
        table = detect_theta(construction.decomposition)
        assert table.entries == construction.expected_theta.entries
        assert table.fully_constrained


@pytest.mark.parametrize("n", [2, 3])
def test_pauli_determinant_squared_is_m_to_the_m(n, pauli2, pauli3):
    construction = pauli2 if n == 2 else pauli3
    table = construction.expected_theta
    det = theta_determinant(table)
    m = n * n
    assert det * det == m**m
    report = bahturin_regev_check(table)
    assert report.passed
    assert report.certificate["equivalence_holds"]
    assert determinant_check(table).passed
    assert msquared_check(table)


def test_qc_relations_note_odd_diagonal(grassmann3):
    table = detect_theta(grassmann3.decomposition)
    report = qc_relations_check(table)
    assert report.passed
    assert not report.certificate["diagonal_all_one"]
    assert report.certificate["diagonal_not_one"]["labels"] == ["odd"]
    assert report.notes == [
        "theta(odd,odd) = -1: impossible for a regular finite-dimensional decomposition"
    ]
    assert even_subgroup(table) == {"even": [0], "odd": [1]}


def test_qc_relations_flags_non_inverse_pair():
    table = ThetaTable.from_entries([[1, 2], [1, 1]])
    report = qc_relations_check(table)
    assert not report.passed
    assert report.certificate["violations"][0]["kind"] == "inverse"


def test_non_realizable_theta_has_duplicate_rows(non_realizable):
    table = detect_theta(non_realizable.decomposition)
    assert table.entries == non_realizable.expected_theta.entries
    report = minimality_check(table)
    assert not report.passed
    positions = [group["positions"] for group in report.certificate["duplicates"]]
    assert positions == [[1, 2], [4, 6]]
    assert distinct_row_count(table) == 4
    assert theta_determinant(table).is_zero()
    assert not determinant_check(table).passed
    regev = bahturin_regev_check(table)
    assert not regev.passed
    assert regev.certificate["equivalence_holds"]


def test_detection_names_the_failing_pair():
    m2 = matrix_algebra(2)
    e11 = element_from_matrix([[1, 0], [0, 0]])
    e12 = element_from_matrix([[0, 1], [0, 0]])
    e21 = element_from_matrix([[0, 0], [1, 0]])
    e22 = element_from_matrix([[0, 0], [0, 1]])
    with pytest.raises(NotScalarMultiple) as excinfo:
        detect_theta(Decomposition(m2, ((e12,), (e21,), (e11, e22))))
    assert (excinfo.value.i, excinfo.value.j) == (0, 1)
    with pytest.raises(OneSidedZero):
        detect_theta(Decomposition(m2, ((e11,), (e12,), (e21, e22))))


def test_unconstrained_entries_block_matrix_criteria():
    table = detect_theta(get_construction("nilpotent-z2").decomposition)
    assert table.constrained == ((True, True), (True, False))
    with pytest.raises(UnconstrainedEntries):
        is_minimal(table)


def test_decomposition_rejects_bad_input():
    m2 = matrix_algebra(2)
    with pytest.raises(ValueError):
        Decomposition(m2, ())
    with pytest.raises(ValueError):
        Decomposition(m2, ((m2.unit_element.scale(0),),))
    with pytest.raises(ValueError):
        Decomposition(m2, ((m2.unit_element,),), ("a", "b"))


@pytest.mark.parametrize(
    "sizes, m, passed, kind",
    [
        ((2, 3), 36, False, "coprime"),
        ((2, 4), 16, True, None),
        ((2, 4), 9, False, "largest-exceeds-sqrt-m"),
        ((1, 4), 16, True, None),
    ],
)
def test_necessary_condition(sizes, m, passed, kind):
    report = necessary_condition_check(sizes, m)
    assert report.passed is passed
    if kind:
        assert report.certificate["violation"]["kind"] == kind


def test_necessary_condition_notes_non_divisor_sizes():
    report = necessary_condition_check((4, 6), 36)
    assert report.passed
    assert "necessary, not sufficient" in report.notes[0]


def test_root_order_against_bound(pauli3):
    table = pauli3.expected_theta
    assert root_order_check(table, 9).passed
    failing = root_order_check(table, 2)
    assert not failing.passed
    assert failing.certificate["violations"][0]["order"] == 3


def test_matrix_rows(pauli3, grassmann3):
    assert matrix_rows_check(pauli3.decomposition, pauli3.expected_theta).passed
    skipped = matrix_rows_check(grassmann3.decomposition, detect_theta(grassmann3.decomposition))
    assert skipped.status == "skipped"


def test_pauli_witness_found_on_first_attempt(pauli2):
    witness = find_witness(pauli2.decomposition, pauli2.expected_theta, seed=0)
    assert witness.status == FOUND
    assert (witness.phase, witness.attempt) == (1, 0)
    assert witness_report(witness).passed


@pytest.mark.parametrize("k", [2, 3, 4])
def test_grassmann_witness_refuted_symbolically(k):
    construction = get_construction("grassmann-z2", k=k)
    table = detect_theta(construction.decomposition)
    sampled = find_witness(construction.decomposition, table, budget=8, seed=1)
    assert sampled.status == INCONCLUSIVE
    assert witness_report(sampled).status == "inconclusive"
    definitive = find_witness(construction.decomposition, table, budget=8, seed=1, definitive=True)
    assert definitive.status == REFUTED
    assert definitive.phase == 2
    assert not witness_report(definitive).passed


def test_symbolic_search_respects_indeterminate_cap(monkeypatch):
    monkeypatch.setenv("QCREG_SYMBOLIC_INDETERMINATE_CAP", "4")
    construction = get_construction("grassmann-z2", k=3)
    table = detect_theta(construction.decomposition)
    witness = find_witness(construction.decomposition, table, budget=1, definitive=True)
    assert witness.status == INCONCLUSIVE
    assert "cap is 4" in witness.notes[0]


def test_non_realizable_witness_product_in_ambient_matrices(non_realizable):
    witness = find_witness(non_realizable.decomposition, non_realizable.expected_theta, seed=0)
    assert witness.status == FOUND
    product = non_realizable.to_ambient(witness.product)
    expected = [[0] * 6 for _ in range(6)]
    expected[4][4], expected[5][5] = -1, 1
    assert matrix_from_element(product) == expected


def test_witness_tuple_products_and_central_invertibility(pauli2):
    witness = find_witness(pauli2.decomposition, pauli2.expected_theta, seed=0)
    report = tuple_product_check(pauli2.decomposition, witness, max_len=4)
    assert report.passed
    assert report.certificate["mode"] == "exhaustive"
    assert report.certificate["checked"] == 4 + 16 + 64 + 256
    assert central_invertibility_check(pauli2.decomposition, witness).passed


def test_witness_checks_skip_without_witness(grassmann3):
    table = detect_theta(grassmann3.decomposition)
    witness = find_witness(grassmann3.decomposition, table, budget=2)
    assert tuple_product_check(grassmann3.decomposition, witness).status == "skipped"
    assert central_invertibility_check(grassmann3.decomposition, witness).status == "skipped"


def test_find_witness_rejects_mismatched_table(pauli2):
    with pytest.raises(ValueError):
        find_witness(pauli2.decomposition, ThetaTable.from_entries([[Cyclotomic.from_int(1)]]))


def test_pauli_four_by_four():
    construction = get_construction("pauli", n=4)
    table = detect_theta(construction.decomposition)
    assert table.entries == construction.expected_theta.entries
    assert is_minimal(table).minimal
    det = theta_determinant(table)
    assert det * det == 16**16
    assert msquared_check(table)
    group = reconstruct_group(construction.decomposition, table)
    assert classify_abelian(group).invariant_factors == (4, 4)


GROUP_GRADED = [
    ("pauli", {"n": 2}),
    ("pauli", {"n": 3}),
    ("kronecker", {"n1": 1, "n2": 2}),
    ("kronecker", {"n1": 2, "n2": 4}),
    ("p-power", {"p": 2, "exponents": "1,1"}),
    ("p-power", {"p": 2, "exponents": "1,2"}),
]


@pytest.mark.parametrize("name, params", GROUP_GRADED)
def test_group_gradings_are_regular_and_minimal(name, params):
    construction = get_construction(name, **params)
    table = construction.expected_theta
    det = theta_determinant(table)
    assert is_minimal(table).minimal == (not det.is_zero())
    assert is_minimal(table).minimal
    assert det * det == table.m**table.m
    assert determinant_check(table).passed
    assert bahturin_regev_check(table).passed
    assert find_witness(construction.decomposition, table, seed=0).found


def test_p_power_one_two_matches_kronecker(kronecker24):
    construction = get_construction("p-power", p=2, exponents="1,2")
    assert construction.algebra.dim == kronecker24.algebra.dim
    assert construction.decomposition.labels == kronecker24.decomposition.labels
    assert construction.expected_theta.entries == kronecker24.expected_theta.entries


def test_kronecker_relations_have_unit_diagonal(kronecker24):
    report = qc_relations_check(detect_theta(kronecker24.decomposition))
    assert report.passed
    assert report.certificate["diagonal_all_one"]
    assert not report.notes


@pytest.mark.parametrize(
    "name, params",
    GROUP_GRADED
    + [
        ("minimal-non-set-grading", {}),
        ("non-realizable-set-grading", {}),
        ("twisted", {"n": 3}),
        ("group-algebra", {"group": "klein"}),
        ("grassmann-z2", {"k": 1}),
        ("grassmann-z2", {"k": 3}),
        ("nilpotent-z2", {}),
        ("commutative", {"k": 3}),
    ],
)
def test_theta_entries_are_roots_of_bounded_order(name, params):
    construction = get_construction(name, **params)
    decomposition = construction.decomposition
    table = detect_theta(decomposition)
    assert root_order_check(table, root_order_bound(decomposition)).passed


def test_root_order_bound_uses_matrix_blocks(kronecker24, minimal_non_set, non_realizable):
    assert root_order_bound(get_construction("kronecker", n1=1, n2=2).decomposition) == 2
    assert root_order_bound(kronecker24.decomposition) == 4
    assert root_order_bound(minimal_non_set.decomposition) == 4
    assert root_order_bound(non_realizable.decomposition) == 6


@pytest.mark.parametrize("fixture", ["pauli2", "pauli3"])
def test_symbolic_witness_always_carries_elements(fixture, request):
    construction = request.getfixturevalue(fixture)
    decomposition = construction.decomposition
    witness = find_witness(decomposition, construction.expected_theta, budget=0, definitive=True)
    assert witness.status == FOUND
    assert witness.phase == 2
    assert len(witness.elements) == decomposition.m
    product = multiply_chain(decomposition.algebra, list(witness.elements))
    assert product.coords == witness.product.coords
    assert is_invertible(decomposition.algebra, product)


def test_symbolic_witness_without_a_good_point_is_inconclusive(monkeypatch, pauli2):
    monkeypatch.setattr(witness_module, "SPECIALIZATION_TRIES", 0)
    witness = find_witness(pauli2.decomposition, pauli2.expected_theta, budget=0, definitive=True)
    assert witness.status == INCONCLUSIVE
    assert witness.elements == ()
    assert not witness_report(witness).passed


def test_symbolic_witness_on_a_non_simple_algebra():
    construction = get_construction("kronecker", n1=1, n2=2)
    decomposition = construction.decomposition
    witness = find_witness(decomposition, construction.expected_theta, budget=0, definitive=True)
    assert witness.found and witness.elements
    assert not is_nilpotent(decomposition.algebra, witness.product)
