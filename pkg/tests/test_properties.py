import random

from hypothesis import given, settings, strategies as st

from fusionsys import perms
from fusionsys.fusion import generated_fusion_system, trivial_fusion_system
from fusionsys.groups import all_subgroups, closure, sylow_subgroup
from fusionsys.morphisms import all_injective_homs, hom_P
from fusionsys.registry import named_group


def permutations_of(degree):
    return st.permutations(list(range(degree))).map(tuple)


@given(permutations_of(6), permutations_of(6), permutations_of(6))
def test_group_axioms(a, b, c):
    assert perms.compose(perms.compose(a, b), c) == \
        perms.compose(a, perms.compose(b, c))
    assert perms.compose(a, perms.identity(6)) == a
    assert perms.compose(a, perms.inverse(a)) == perms.identity(6)


@given(permutations_of(7))
def test_cycle_roundtrip(a):
    assert perms.from_cycles(perms.to_cycles(a, one_based=False), 7) == a
    assert perms.from_cycles(perms.to_cycles(a, one_based=True), 7,
                             one_based=True) == a


@given(permutations_of(7))
def test_order_matches_iteration(a):
    n = perms.order(a)
    x = a
    for _ in range(n - 1):
        x = perms.compose(x, a)
    assert x == perms.identity(7)
    assert n >= 1


@settings(max_examples=25, deadline=None)
@given(st.lists(permutations_of(5), min_size=1, max_size=3))
def test_generated_closure_is_a_group(gens):
    members = closure(set(gens), 5)
    assert perms.identity(5) in members
    for a in members:
        assert perms.inverse(a) in members
    assert 120 % len(members) == 0  # Lagrange inside S5


@settings(max_examples=20, deadline=None)
@given(st.data())
def test_hom_p_within_all_injective(data):
    G = named_group("S4")
    P = sylow_subgroup(G, 2)
    subs = all_subgroups(P)
    S = data.draw(st.sampled_from(subs))
    T = data.draw(st.sampled_from(subs))
    assert hom_P(P, S, T) <= all_injective_homs(S, T)


@settings(max_examples=10, deadline=None)
@given(st.data())
def test_generated_system_monotone_in_seed(data):
    G = named_group("S4")
    P = sylow_subgroup(G, 2)
    from fusionsys.fusion import fusion_system_of_group
    F = fusion_system_of_group(G, P, 2)
    pool = sorted((phi for isoset in F._isos.values() for phi in isoset),
                  key=lambda m: m.key)
    small = data.draw(st.lists(st.sampled_from(pool), max_size=3))
    extra = data.draw(st.lists(st.sampled_from(pool), max_size=3))
    F1 = generated_fusion_system(P, small, 2)
    F2 = generated_fusion_system(P, small + extra, 2)
    assert F1.leq(F2)
    assert trivial_fusion_system(P, 2).leq(F1)
    assert F2.leq(F)
