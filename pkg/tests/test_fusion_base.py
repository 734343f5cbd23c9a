import pytest

from fusionsys import perms
from fusionsys.fusion import (
    fusion_system_of_group,
    generated_fusion_system,
    trivial_fusion_system,
    universal_fusion_system,
)
from fusionsys.groups import all_subgroups, sylow_subgroup
from fusionsys.morphisms import GroupMorphism, hom_P
from fusionsys.registry import named_group


def _v4_aut3(f):
    """An order-3 automorphism of the Klein subgroup of D8 <= S4."""
    x = perms.from_cycles([[1, 2], [3, 4]], 4, one_based=True)
    y = perms.from_cycles([[1, 3], [2, 4]], 4, one_based=True)
    z = perms.compose(x, y)
    V = f.subgroup_of(frozenset({perms.identity(4), x, y, z}))
    e = perms.identity(4)
    return GroupMorphism(V, V, {e: e, x: y, y: z, z: x})


def test_trivial_homsets_are_p_conjugations(f_trivial_d8, d8):
    for S in all_subgroups(d8):
        S = f_trivial_d8.subgroup_of(S.members)
        for T in all_subgroups(d8):
            T = f_trivial_d8.subgroup_of(T.members)
            assert f_trivial_d8.hom_set(S, T) == hom_P(d8, S, T)


def test_center_images_in_s4_system(f_s4, d8):
    z = next(x for x in d8.members
             if perms.order(x) == 2
             and all(perms.compose(x, g) == perms.compose(g, x)
                     for g in d8.members))
    Z = f_s4.subgroup_of(frozenset({perms.identity(4), z}))
    P = f_s4.subgroup_of(d8.members)
    images = {phi.image_members for phi in f_s4.hom_set(Z, P)}
    # Z(P) fuses to all three Klein-four involution subgroups' slots
    assert len(images) == 3


def test_aut_f_in_s3():
    S3 = named_group("S3")
    P = sylow_subgroup(S3, 3)
    F = fusion_system_of_group(S3, P, 3)
    assert len(F.aut_f(F.subgroup_of(P.members))) == 2


def test_universal_on_c2_is_trivial():
    C2 = named_group("C2")
    P = C2.full_subgroup
    assert universal_fusion_system(P, 2).equal(trivial_fusion_system(P, 2))


def test_universal_aut_counts(d8, u_d8):
    V4 = named_group("V4")
    U = universal_fusion_system(V4.full_subgroup, 2)
    assert len(U.aut_f(U.subgroup_of(V4.element_set))) == 6
    assert len(u_d8.aut_f(u_d8.subgroup_of(d8.members))) == 8


def test_generated_empty_seed_is_trivial(d8, f_trivial_d8):
    assert generated_fusion_system(d8, [], 2).equal(f_trivial_d8)


def test_generated_by_v4_triality_recovers_s4(d8, f_s4):
    seed = [_v4_aut3(f_s4)]
    F = generated_fusion_system(d8, seed, 2)
    assert F.equal(f_s4)


def test_generation_idempotent(d8, f_s4):
    seed = list(f_s4.aut_f(f_s4.subgroup_of(d8.members)))
    for isoset in f_s4._isos.values():
        seed.extend(isoset)
    again = generated_fusion_system(d8, seed, 2)
    assert again.equal(f_s4)


def test_hom_set_contains_identity(f_s4, d8):
    for S in all_subgroups(d8):
        S = f_s4.subgroup_of(S.members)
        assert any(phi.is_identity() for phi in f_s4.hom_set(S, S))


def test_gl32_involutions_single_class(f_gl32):
    invs = [x for x in f_gl32.P.members if perms.order(x) == 2]
    assert len(invs) == 5
    cls = f_gl32.f_conjugacy.class_of_element(invs[0])
    assert all(x in cls for x in invs)


def test_s4_element_fusion(f_s4, d8):
    # fusion preserves element order, and S4 fuses all five involutions
    # of its Sylow 2-subgroup into the two S4-classes
    for c in f_s4.f_conjugacy.element_classes:
        orders = {perms.order(x) for x in c}
        assert len(orders) == 1
    invs = [x for x in d8.members if perms.order(x) == 2]
    classes = {frozenset(f_s4.f_conjugacy.class_of_element(x)) for x in invs}
    assert len(classes) == 2


def test_abelian_system_singleton_classes():
    G = named_group("C4xC2")
    P = G.full_subgroup
    F = fusion_system_of_group(G, P, 2)
    for c in F.f_conjugacy.element_classes:
        assert len(c) == 1


def test_p_conjugacy_refines_f_conjugacy(f_s4, d8):
    P = d8.as_group()
    for x in d8.members:
        orbit = {perms.conjugate(g, x) for g in d8.members}
        cls = set(f_s4.f_conjugacy.class_of_element(x))
        assert orbit <= cls


def test_leq_chain(f_trivial_d8, f_s4, u_d8):
    assert f_trivial_d8.leq(f_s4)
    assert f_s4.leq(u_d8)
    assert not u_d8.leq(f_s4)
    assert not f_s4.leq(f_trivial_d8)


def test_distinct_systems_on_d8(f_s4, f_gl32):
    # different underlying groups, compare by morphism census
    assert f_s4.iso_count() != f_gl32.iso_count()


def test_axioms_hold(f_s4, f_gl32, f_trivial_d8, u_d8):
    for F in (f_s4, f_gl32, f_trivial_d8, u_d8):
        F.verify_axioms()


def test_json_roundtrip_shape(f_s4):
    d = f_s4.to_json_dict()
    assert d["p"] == 2
    assert len(d["elements"]) == 8
    assert isinstance(d["isomorphisms"], dict) and d["isomorphisms"]
