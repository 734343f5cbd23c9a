import pytest

from fusionsys import perms
from fusionsys.errors import NotIsomorphism
from fusionsys.groups import all_subgroups, centralizer, normalizer
from fusionsys.morphisms import (
    GroupMorphism,
    all_injective_homs,
    aut_P,
    automorphism_group_maps,
    hom_P,
    hom_from_conjugation,
    identity_morphism,
    inner_automorphisms,
    realize_aut_group,
)
from fusionsys.registry import named_group


def _subgen(G, cycles, degree):
    gens = [perms.from_cycles(c, degree, one_based=True) for c in cycles]
    return G.full_subgroup.generated_subgroup(gens) \
        if hasattr(G.full_subgroup, "generated_subgroup") \
        else G.generated_subgroup(gens)


def test_identity_morphism(d8):
    phi = identity_morphism(d8)
    assert phi.is_identity()
    assert phi.is_iso()
    assert phi.image_members == d8.members


def test_conjugation_inverts_rotation(s4):
    r = perms.from_cycles([[1, 2, 3]], 4, one_based=True)
    t = perms.from_cycles([[2, 3]], 4, one_based=True)
    A3 = s4.generated_subgroup([r])
    phi = hom_from_conjugation(t, A3, A3)
    assert phi(r) == perms.inverse(r)
    assert phi.is_iso()


def test_conjugation_fixes_central_element(s4, d8):
    z = perms.from_cycles([[1, 2], [3, 4]], 4, one_based=True)
    Z = d8.parent.generated_subgroup([z])
    for g in d8.members:
        phi = hom_from_conjugation(g, Z, Z)
        assert phi(z) == z


def test_hom_p_center_is_identity_only(s4, d8):
    z = perms.from_cycles([[1, 3], [2, 4]], 4, one_based=True)
    Z = s4.generated_subgroup([z])
    maps = hom_P(d8, Z, Z)
    assert len(maps) == 1
    assert next(iter(maps)).is_identity()


def test_aut_p_of_klein_in_d8(s4, d8):
    x = perms.from_cycles([[1, 2], [3, 4]], 4, one_based=True)
    y = perms.from_cycles([[1, 3], [2, 4]], 4, one_based=True)
    V = s4.generated_subgroup([x, y])
    auts = aut_P(d8, V)
    # N_D8(V) = D8, C_D8(V) = V, so Aut_P(V) has order 2
    assert len(auts) == 2


def test_hom_p_empty_without_conjugate_image(s4, d8):
    x = perms.from_cycles([[1, 2]], 4, one_based=True)
    y = perms.from_cycles([[1, 2, 3, 4]], 4, one_based=True)
    S = s4.generated_subgroup([x])
    T = s4.generated_subgroup([y])
    assert S.members <= d8.members
    assert hom_P(d8, S, T) == frozenset()


def test_all_injective_homs_counts():
    C2 = named_group("C2")
    assert len(all_injective_homs(C2.full_subgroup, C2.full_subgroup)) == 1
    V4 = named_group("V4")
    assert len(automorphism_group_maps(V4.full_subgroup)) == 6


def test_c4_embeddings_in_d8(s4, d8):
    r = next(x for x in sorted(d8.members) if perms.order(x) == 4)
    C4 = s4.generated_subgroup([r])
    embeddings = [phi for phi in all_injective_homs(C4, d8)]
    assert len(embeddings) == 2
    assert {phi(r) for phi in embeddings} == {r, perms.inverse(r)}


def test_aut_p_order_identity(d8):
    # |Aut_P(S)| = |N_P(S)| / |C_P(S)| over the whole D8 lattice
    P = d8.as_group()
    for S in all_subgroups(d8):
        SP = P.subgroup(S.members)
        n = normalizer(P, SP).order
        c = centralizer(P, SP).order
        assert len(aut_P(d8, S)) * c == n


def test_hom_p_inside_all_injective(s4, d8):
    for S in all_subgroups(d8):
        for T in all_subgroups(d8):
            assert hom_P(d8, S, T) <= all_injective_homs(S, T)


def test_inner_automorphisms_of_d8(d8):
    inner = inner_automorphisms(d8)
    # D8 / Z(D8) has order 4
    assert len(inner) == 4


def test_realized_out_of_klein_in_s4(s4, f_s4):
    x = perms.from_cycles([[1, 2], [3, 4]], 4, one_based=True)
    y = perms.from_cycles([[1, 3], [2, 4]], 4, one_based=True)
    V = s4.generated_subgroup([x, y])
    V = f_s4.subgroup_of(V.members)
    realized = realize_aut_group(V, f_s4.aut_f(V))
    assert realized.carrier.order == 6
    assert realized.inner.order == 1
    out = realized.outer_quotient.group
    assert out.order == 6 and not out.is_abelian()


def test_realized_aut_d8(d8):
    realized = realize_aut_group(d8, automorphism_group_maps(d8))
    assert realized.carrier.order == 8
    assert realized.inner.order == 4
    assert realized.outer_quotient.group.order == 2


def test_realized_tagging_respects_composition(d8):
    realized = realize_aut_group(d8, automorphism_group_maps(d8))
    elems = realized.carrier.elements[:5]
    for a in elems:
        for b in elems:
            lhs = realized.tagging[perms.compose(a, b)]
            rhs = realized.tagging[a].compose(realized.tagging[b])
            assert lhs == rhs


def test_morphism_serialization(d8):
    idx = {x: i for i, x in enumerate(sorted(d8.members))}
    phi = identity_morphism(d8)
    d = phi.to_dict(idx)
    assert set(d) == {"domain", "codomain", "pairs"}
    assert all(a == b for a, b in d["pairs"])


def test_morphism_validation_rejects_non_hom(s4):
    r = perms.from_cycles([[1, 2, 3]], 4, one_based=True)
    A3 = s4.generated_subgroup([r])
    bad = {x: x for x in A3.members}
    bad[r] = perms.inverse(r)  # breaks multiplicativity with r*r
    with pytest.raises(NotIsomorphism):
        GroupMorphism(A3, A3, bad)
