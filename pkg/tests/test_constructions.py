import pytest

from core.algebra.structure import check_associativity
from core.constructions import (
    CONSTRUCTIONS,
    ConstructionError,
    get_construction,
    list_constructions,
    parse_reference,
)
from core.constructions.divisor import parse_exponents
from core.constructions.graded_algebras import group_from_spec
from core.constructions.pauli import pauli_monomial
from core.constructions.set_gradings import (
    example_6_1,
    example_6_2,
    minimal_non_set_grading,
    non_realizable_set_grading,
)
from core.decomp.decomposition import check_direct_sum, detect_theta


def test_registry_lists_every_construction():
    names = [name for name, _, _ in list_constructions()]
    assert names == list(CONSTRUCTIONS)
    assert "pauli" in names and "non-realizable-set-grading" in names


def test_unknown_names_and_parameters():
    with pytest.raises(KeyError, match="Unknown construction 'nope'"):
        get_construction("nope")
    with pytest.raises(ValueError):
        get_construction("pauli", k=2)
    with pytest.raises(ValueError):
        parse_reference("nilpotent-z2:1")
    with pytest.raises(ValueError):
        parse_reference("pauli:two")


def test_parse_reference_fills_the_first_parameter():
    construction = parse_reference("grassmann-z2:4")
    assert construction.params == {"k": 4}
    assert construction.decomposition.algebra.dim == 16
    assert parse_reference("pauli").params == {"n": 2}
    assert parse_reference("group-algebra:quaternion").algebra.dim == 8


def test_slugs_include_parameters():
    assert get_construction("pauli", n=3).slug == "pauli-3"
    assert get_construction("p-power", p=2, exponents="2,1").slug == "p-power-2-1_2"
    assert get_construction("nilpotent-z2").slug == "nilpotent-z2"


def test_pauli_monomials_commute_up_to_roots(pauli3):
    assert pauli_monomial(3, 0, 0) == pauli3.algebra.unit_element
    assert check_direct_sum(pauli3.decomposition)
    assert pauli3.decomposition.m == 9
    assert pauli3.expected_group.invariant_factors == (3, 3)


def test_pauli_of_size_one_is_trivially_graded():
    construction = get_construction("pauli", n=1)
    assert construction.decomposition.m == 1
    assert construction.expected_group.invariant_factors == ()


def test_kronecker_requires_divisibility():
    with pytest.raises(ConstructionError):
        get_construction("kronecker", n1=2, n2=3)
    with pytest.raises(ConstructionError):
        get_construction("kronecker", n1=0, n2=4)


def test_kronecker_theta_is_the_product_table(kronecker24):
    decomposition = kronecker24.decomposition
    assert decomposition.algebra.dim == 4 + 16
    assert decomposition.algebra.components == ((0, 4), (4, 16))
    assert decomposition.m == 16
    assert check_direct_sum(decomposition)
    assert detect_theta(decomposition).entries == kronecker24.expected_theta.entries
    assert kronecker24.expected_group.invariant_factors == (2, 2, 2, 2)
    assert kronecker24.params == {"n1": 2, "n2": 4}


@pytest.mark.parametrize("exponents, dim", [("1,1", 8), ("1,2", 20)])
def test_p_power_sums(exponents, dim):
    construction = get_construction("p-power", p=2, exponents=exponents)
    decomposition = construction.decomposition
    assert decomposition.algebra.dim == dim
    assert check_direct_sum(decomposition)
    assert detect_theta(decomposition).entries == construction.expected_theta.entries
    assert check_associativity(decomposition.algebra).passed


def test_p_power_validation():
    with pytest.raises(ConstructionError):
        get_construction("p-power", p=4, exponents="1")
    with pytest.raises(ConstructionError):
        parse_exponents("1,a")
    with pytest.raises(ConstructionError):
        parse_exponents("")
    with pytest.raises(ConstructionError):
        parse_exponents([1, -1])
    assert parse_exponents("3, 1") == [1, 3]


def test_grassmann_expected_theta_only_with_two_generators():
    assert get_construction("grassmann-z2", k=1).expected_theta is None
    table = detect_theta(get_construction("grassmann-z2", k=1).decomposition)
    assert not table.fully_constrained
    assert get_construction("grassmann-z2", k=2).expected_theta is not None


def test_group_algebras():
    klein = get_construction("group-algebra", group="klein")
    assert detect_theta(klein.decomposition).entries == klein.expected_theta.entries
    assert klein.expected_group.invariant_factors == (2, 2)
    s3 = get_construction("group-algebra", group="s3")
    assert s3.expected_theta is None
    assert group_from_spec("abelian:2,3").m == 6
    assert group_from_spec("cyclic:5").m == 5
    for bad in ("cyclic:x", "dihedral"):
        with pytest.raises(ConstructionError):
            group_from_spec(bad)


def test_twisted_construction_theta(pauli2):
    twisted = get_construction("twisted", n=2)
    assert detect_theta(twisted.decomposition).entries == twisted.expected_theta.entries
    assert twisted.expected_group.invariant_factors == (2, 2)


def test_commutative_and_to_ambient():
    construction = get_construction("commutative", k=3)
    assert construction.decomposition.m == 1
    unit = construction.algebra.unit_element
    assert construction.to_ambient(unit) == unit
    with pytest.raises(ConstructionError):
        get_construction("commutative", k=0)


def test_non_realizable_embeds_into_six_by_six(non_realizable):
    assert non_realizable.ambient.dim == 36
    assert non_realizable.algebra.dim == 6
    unit = non_realizable.to_ambient(non_realizable.algebra.unit_element)
    assert unit == non_realizable.ambient.unit_element


def test_numbered_aliases_build_the_set_grading_fixtures():
    assert example_6_1 is minimal_non_set_grading
    assert example_6_2 is non_realizable_set_grading
    first = get_construction("example-6-1").decomposition
    assert first.m == 16
    assert sorted(first.sizes, reverse=True) == [2, 2, 2, 2] + [1] * 12
    assert first.algebra.dim == 20
    second = parse_reference("example-6-2").decomposition
    assert second.m == 6
    assert second.algebra.dim == 6
