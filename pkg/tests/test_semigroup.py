import pytest

from relsize.bits import from_elements as fe
from relsize.errors import NonAssociative, NotASubsemigroup, NotSquare, OutOfRangeEntry
from relsize.semigroup import (
    idempotents,
    is_subsemigroup,
    minimal_left_ideals,
    preimage,
    smallest_ideal,
    standard_semigroup,
    two_sided_ideals,
    validate_cayley,
)


def test_derived_z2_and_left_zero_tables_validate():
    assert validate_cayley(2, [[0, 1], [1, 0]]).n == 2
    assert validate_cayley(2, [[0, 0], [1, 1]]).table == ((0, 0), (1, 1))


def test_derived_non_associative_witness_is_first_failing_triple():
    with pytest.raises(NonAssociative) as info:
        validate_cayley(2, [[1, 0], [0, 0]])
    assert info.value.witness == (0, 0, 1)


def test_malformed_tables():
    with pytest.raises(NotSquare):
        validate_cayley(2, [[0, 1]])
    with pytest.raises(OutOfRangeEntry):
        validate_cayley(2, [[0, 2], [1, 0]])


def test_derived_preimage_examples():
    z3 = standard_semigroup("cyclic_group", 3)
    assert preimage(z3, 1, fe([0])) == fe([2])
    lz = standard_semigroup("left_zero", 2)
    assert preimage(lz, 0, fe([0])) == fe([0, 1])
    for h in range(3):
        assert preimage(z3, h, 0b111) == 0b111


def test_derived_minimal_left_ideals():
    assert minimal_left_ideals(standard_semigroup("left_zero", 2)) == [0b11]
    assert sorted(minimal_left_ideals(standard_semigroup("right_zero", 2))) == [0b01, 0b10]
    assert minimal_left_ideals(standard_semigroup("cyclic_group", 3)) == [0b111]


def test_derived_smallest_ideal():
    assert smallest_ideal(standard_semigroup("meet_semilattice_chain", 2)) == 0b01
    assert smallest_ideal(standard_semigroup("right_zero", 2)) == 0b11
    assert smallest_ideal(standard_semigroup("cyclic_group", 4)) == 0b1111


def test_derived_idempotents():
    assert idempotents(standard_semigroup("cyclic_group", 2)) == 0b01
    assert idempotents(standard_semigroup("meet_semilattice_chain", 2)) == 0b11
    assert idempotents(standard_semigroup("left_zero", 2)) == 0b11
    assert idempotents(standard_semigroup("rectangular_band", 2)) == 0b1111


def test_standard_tables():
    assert standard_semigroup("cyclic_group", 3).table == ((0, 1, 2), (1, 2, 0), (2, 0, 1))
    assert standard_semigroup("left_zero", 2).table == ((0, 0), (1, 1))
    rb = standard_semigroup("rectangular_band", 2)
    assert rb.n == 4 and rb.mul(rb.mul(1, 2), 3) == rb.mul(1, rb.mul(2, 3))
    assert standard_semigroup("full_transformation", 2).n == 4


def test_subsemigroup_checks():
    z2 = standard_semigroup("cyclic_group", 2)
    assert is_subsemigroup(z2, 0b01)
    assert not is_subsemigroup(z2, 0b10)
    with pytest.raises(NotASubsemigroup):
        minimal_left_ideals(z2, 0b10)


def test_two_sided_ideals_contain_smallest():
    sl3 = standard_semigroup("meet_semilattice_chain", 3)
    K = smallest_ideal(sl3)
    assert all(K & ~I == 0 for I in two_sided_ideals(sl3))
