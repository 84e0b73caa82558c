from relsize.bits import from_elements as fe
from relsize.derived import derived_set, is_idempotent_collection, is_translation_invariant, product
from relsize.families import Collection
from relsize.semigroup import standard_semigroup

Z2 = standard_semigroup("cyclic_group", 2)
Z3 = standard_semigroup("cyclic_group", 3)
LZ2 = standard_semigroup("left_zero", 2)


def test_derived_derived_set_examples():
    assert derived_set(Z3, fe([0]), Collection.point(3, 1)) == fe([2])
    assert derived_set(LZ2, fe([0]), Collection.point(2, 0)) == fe([0])


def test_derived_principal_product_rule_all_roster_pairs():
    for kind, n in [("cyclic_group", 3), ("left_zero", 2), ("right_zero", 2),
                    ("meet_semilattice_chain", 3), ("rectangular_band", 2), ("full_transformation", 2)]:
        S = standard_semigroup(kind, n)
        for x in range(S.n):
            for y in range(S.n):
                got = product(S, Collection.point(S.n, x), Collection.point(S.n, y))
                assert got == Collection.point(S.n, S.mul(x, y)), (kind, x, y)


def test_stated_improper_left_operand_table():
    for S in (Z2, Z3, LZ2):
        n = S.n
        for G in (Collection.top(n), Collection.point(n, 0), Collection.empty(n)):
            assert product(S, Collection.empty(n), G) == Collection.empty(n)
            assert product(S, Collection.powerset(n), G) == Collection.powerset(n)


def test_stated_improper_right_operand_tables():
    n = 3
    e, p = Collection.empty(n), Collection.powerset(n)
    with_empty = Collection.from_sets(n, [[], [0]])
    without = Collection.point(n, 1)
    assert product(Z3, without, e) == e
    assert product(Z3, with_empty, e) == p
    # F.P(S): every derived set is S, so the result is P(S) exactly when S is in F
    assert product(Z3, without, p) == p
    assert product(Z3, Collection.from_sets(n, [[0]]), p) == e


def test_translation_invariance_examples():
    assert is_translation_invariant(Z2, Collection.top(2))
    assert not is_translation_invariant(Z2, Collection.point(2, 0))
    assert is_translation_invariant(Z2, Collection.powerset(2))


def test_derived_idempotent_examples():
    sl2 = standard_semigroup("meet_semilattice_chain", 2)
    assert is_idempotent_collection(sl2, Collection.point(2, 0))
    assert not is_idempotent_collection(Z2, Collection.point(2, 1))


def test_derived_translation_invariant_without_S_need_not_be_idempotent():
    # {{}} is translation invariant on Z2 but {{}}.{{}} = P(S)
    C = Collection.from_sets(2, [[]])
    assert is_translation_invariant(Z2, C)
    assert not is_idempotent_collection(Z2, C)
