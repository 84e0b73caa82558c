import pytest

from relsize.bits import from_elements as fe
from relsize.errors import HypothesisViolated, NotAFilter
from relsize.families import Collection
from relsize.kernel import (
    absolute_characterization,
    central_collection,
    check_relative_kernel_membership,
    fip_rel_ps,
    is_collectionwise_ps,
    is_rel_central,
    is_rel_ps_equiv,
    kernel_idempotents,
    make_kernel_context,
    relative_kernel,
)
from relsize.semigroup import smallest_ideal, standard_semigroup

SL2 = standard_semigroup("meet_semilattice_chain", 2)
Z2 = standard_semigroup("cyclic_group", 2)
RZ2 = standard_semigroup("right_zero", 2)
TOP2 = Collection.top(2)


@pytest.fixture
def sl_ctx():
    return make_kernel_context(SL2, Collection.point(2, 0), TOP2)


def test_derived_semilattice_context(sl_ctx):
    assert sl_ctx.f_bar == 0b01
    assert sl_ctx.f_condition and sl_ctx.g_product and sl_ctx.f_product


def test_derived_z2_fails_f_condition():
    assert not make_kernel_context(Z2, Collection.point(2, 1), TOP2).f_condition


def test_derived_semilattice_kernel_is_zero(sl_ctx):
    assert relative_kernel(sl_ctx) == fe([0])


def test_stated_absolute_kernel_is_smallest_ideal():
    for kind, n in [("cyclic_group", 3), ("right_zero", 2), ("meet_semilattice_chain", 3),
                    ("rectangular_band", 2), ("full_transformation", 2)]:
        S = standard_semigroup(kind, n)
        top = Collection.top(S.n)
        assert relative_kernel(make_kernel_context(S, top, top)) == smallest_ideal(S)
    assert relative_kernel(make_kernel_context(RZ2, TOP2, TOP2)) == 0b11


def test_derived_kernel_membership_records(sl_ctx):
    assert all(check_relative_kernel_membership(sl_ctx, 0).values())
    assert not any(check_relative_kernel_membership(sl_ctx, 1).values())


def test_derived_ps_equivalences(sl_ctx):
    assert all(is_rel_ps_equiv(fe([0]), sl_ctx).values())
    assert not any(is_rel_ps_equiv(fe([1]), sl_ctx).values())
    assert all(is_rel_ps_equiv(0b11, sl_ctx).values())


def test_derived_fip_examples(sl_ctx):
    assert fip_rel_ps(fe([0]), sl_ctx)
    assert not fip_rel_ps(fe([1]), sl_ctx)
    ctx = make_kernel_context(RZ2, TOP2, TOP2)
    assert fip_rel_ps(smallest_ideal(RZ2), ctx)


def test_derived_collectionwise_examples(sl_ctx):
    assert is_collectionwise_ps(Collection.from_sets(2, [[0], [0, 1]]), sl_ctx)
    assert not is_collectionwise_ps(Collection.from_sets(2, [[0], [1]]), sl_ctx)


def test_derived_central_sets():
    ctx = make_kernel_context(Z2, TOP2, TOP2)
    assert is_rel_central(0b11, ctx)
    assert is_rel_central(fe([0]), ctx)
    assert not is_rel_central(fe([1]), ctx)


def test_derived_semilattice_central_iff_contains_zero(sl_ctx):
    assert central_collection(sl_ctx) == Collection.from_sets(2, [A for A in range(4) if A & 1])
    assert kernel_idempotents(sl_ctx) == fe([0])


def test_derived_kernel_idempotents_absolute():
    z3 = standard_semigroup("cyclic_group", 3)
    top3 = Collection.top(3)
    assert kernel_idempotents(make_kernel_context(z3, top3, top3)) == fe([0])
    assert kernel_idempotents(make_kernel_context(RZ2, TOP2, TOP2)) == 0b11


def test_context_rejects_non_filters():
    with pytest.raises(NotAFilter):
        make_kernel_context(Z2, Collection.from_sets(2, [[0], [1]]), TOP2)
    with pytest.raises(HypothesisViolated):
        make_kernel_context(Z2, Collection.powerset(2), TOP2)


def test_kernel_idempotents_require_hypotheses():
    ctx = make_kernel_context(Z2, Collection.point(2, 1), TOP2)
    with pytest.raises(HypothesisViolated):
        kernel_idempotents(ctx)


def test_derived_absolute_characterization_agrees_on_t2():
    S = standard_semigroup("full_transformation", 2)
    for A in range(1 << S.n):
        assert len(set(absolute_characterization(S, A).values())) == 1
