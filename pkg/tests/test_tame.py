"""Tame lab: automorphism enumeration, move-induced subgroup, class structure."""

import pytest

from nielsen.errors import UsageError
from nielsen.groups import (
    BurnsideB23,
    FiniteAbelianExp,
    FiniteCayley,
    dihedral_table,
)
from nielsen.tame import (
    NotRelativelyFreeError,
    aut_group,
    move_automorphisms,
    tame_subgroup,
    verify_component_structure,
)


def test_aut_counts():
    assert aut_group(FiniteAbelianExp(5, 1), 1).order == 4
    assert aut_group(FiniteAbelianExp(3, 2), 2).order == 48
    assert aut_group(FiniteAbelianExp(2, 1), 1).order == 1
    # |Aut B(2,3)|: generating pairs = (pairs with independent images mod
    # the center) = 48 * 9
    assert aut_group(BurnsideB23(), 2).order == 432


def test_tuple_automorphism_bijection_counts():
    for group, d in ((FiniteAbelianExp(5, 1), 1), (FiniteAbelianExp(3, 2), 2), (BurnsideB23(), 2)):
        act = aut_group(group, d)
        assert len(act.tuples) == act.order
        assert len({p for p in act.perms}) == act.order


def test_move_images_are_automorphisms():
    act = aut_group(BurnsideB23(), 2)
    gens = move_automorphisms(act)
    assert len(gens) == 10
    for phi in gens.values():
        assert sorted(phi) == list(range(27))


def test_tame_subgroup_cyclic5():
    act = aut_group(FiniteAbelianExp(5, 1), 1)
    rep = tame_subgroup(act)
    assert rep.tame_order == 2 and rep.index == 2  # only negation is induced
    assert sum(act.tame_flags) == 2


def test_tame_subgroup_elementary():
    rep = tame_subgroup(aut_group(FiniteAbelianExp(3, 2), 2))
    assert rep.index == 1  # dets mod 3 are all +-1


def test_tame_subgroup_mod5_rank2_determinant_oracle():
    # tame matrices over (Z/5)^2 are those with det = +-1 mod 5; the unit
    # group has order 4, so the index is 2
    act = aut_group(FiniteAbelianExp(5, 2), 2)
    rep = tame_subgroup(act)
    assert rep.aut_order == 480  # |GL_2(F_5)| = (25-1)(25-5)
    assert rep.tame_order == 240 and rep.index == 2
    # membership matches the determinant criterion automorphism by
    # automorphism, not just by counts
    elems = list(act.table.elements)
    for perm, flag in zip(act.perms, act.tame_flags):
        c1 = elems[perm[act.table.index[(1, 0)]]]
        c2 = elems[perm[act.table.index[(0, 1)]]]
        det = (c1[0] * c2[1] - c1[1] * c2[0]) % 5
        assert flag == (det in (1, 4))


def test_not_relatively_free_reports_discrepancy():
    s3 = FiniteCayley(dihedral_table(3), 0)
    with pytest.raises(NotRelativelyFreeError) as err:
        aut_group(s3, 2)
    assert err.value.generating == 18
    assert err.value.extending == 6  # |Aut S_3| = |Inn S_3| = 6
    with pytest.raises(UsageError):
        aut_group(FiniteAbelianExp(3, 2), 3)  # base length mismatch


def test_component_structure_reports():
    rep = verify_component_structure(FiniteAbelianExp(5, 1), 1)
    assert rep.num_components == 2 and rep.component_sizes == [2, 2]
    assert rep.index == 2 and rep.ok

    rep = verify_component_structure(FiniteAbelianExp(3, 2), 2)
    assert rep.num_components == 1 and rep.component_sizes == [48]
    assert rep.tame_order == 48 and rep.ok

    rep = verify_component_structure(BurnsideB23(), 2)
    assert rep.num_components == rep.index
    assert all(s == rep.tame_order for s in rep.component_sizes)
    assert rep.components_isomorphic and rep.cayley_match and rep.ok


def test_component_structure_with_multiple_classes():
    # (Z/5)^2 splits into two classes; the isomorphism and Cayley checks
    # must hold across both
    rep = verify_component_structure(FiniteAbelianExp(5, 2), 2)
    assert rep.num_components == 2
    assert rep.component_sizes == [240, 240]
    assert rep.ok


def test_trivial_aut_instance():
    rep = verify_component_structure(FiniteAbelianExp(2, 1), 1)
    assert rep.aut_order == 1 and rep.index == 1
    assert rep.num_components == 1 and rep.component_sizes == [1]


def test_index_times_tame_order_is_aut_order():
    for group, d in (
        (FiniteAbelianExp(5, 1), 1),
        (FiniteAbelianExp(8, 1), 1),
        (FiniteAbelianExp(3, 2), 2),
        (BurnsideB23(), 2),
    ):
        rep = tame_subgroup(aut_group(group, d))
        assert rep.tame_order * rep.index == rep.aut_order
