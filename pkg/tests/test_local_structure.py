import pytest

from fusionsys import perms
from fusionsys.errors import NotNormal, NotNormalInF, NotNormalizedRepresentative
from fusionsys.fusion import fusion_system_of_group
from fusionsys.groups import (
    centralizer,
    is_isomorphic,
    normalizer,
    sylow_subgroup,
)
from fusionsys.local import (
    LocalKind,
    center,
    is_constrained,
    is_normal,
    local_subsystem,
    o_p,
    quotient_fusion_system,
)
from fusionsys.registry import named_group
from fusionsys.saturation import is_saturated


def _klein(f):
    e = perms.identity(4)
    x = perms.from_cycles([[1, 2], [3, 4]], 4, one_based=True)
    y = perms.from_cycles([[1, 3], [2, 4]], 4, one_based=True)
    return f.subgroup_of(frozenset({e, x, y, perms.compose(x, y)}))


def test_normalizer_of_klein_is_whole_system(f_s4):
    V = _klein(f_s4)
    assert local_subsystem(f_s4, V, LocalKind.normalizer).equal(f_s4)
    assert is_normal(f_s4, V)


def test_o_2_of_s4_system(f_s4):
    V = _klein(f_s4)
    assert o_p(f_s4).members == V.members


def test_constrained_examples(f_s4, f_gl32, f_trivial_d8):
    assert is_constrained(f_s4)
    assert is_constrained(f_trivial_d8)
    assert not is_constrained(f_gl32)  # O_2 = 1 there


def test_center_values(f_s4, f_gl32, f_trivial_d8, d8):
    assert center(f_s4).order == 1
    assert center(f_gl32).order == 1
    zd8 = centralizer(d8.as_group(), d8)
    assert center(f_trivial_d8).members == zd8.members


def test_centralizer_of_center_recovers_f(f_s4):
    Z = f_s4.subgroup_of(center(f_s4).members)  # trivial here
    assert local_subsystem(f_s4, Z, LocalKind.centralizer).equal(f_s4)


def test_centralizer_matches_group_side(f_s4, s4, d8):
    z = next(x for x in d8.members
             if perms.order(x) == 2
             and all(perms.compose(x, g) == perms.compose(g, x)
                     for g in d8.members))
    Z = f_s4.subgroup_of(frozenset({perms.identity(4), z}))
    got = local_subsystem(f_s4, Z, LocalKind.centralizer)
    CG = centralizer(s4, Z).as_group()
    CP = f_s4.c_p(Z)
    want = fusion_system_of_group(CG, CG.subgroup(CP.members), 2)
    assert got._iso_key_table() == want._iso_key_table()


def test_q_centralizer_sits_between(f_gl32):
    for cls in f_gl32.f_conjugacy.subgroup_classes:
        Q = f_gl32.f_conjugacy.representative_for(cls[0])
        c = local_subsystem(f_gl32, Q, LocalKind.centralizer)
        qc = local_subsystem(f_gl32, Q, LocalKind.q_centralizer)
        n = local_subsystem(f_gl32, Q, LocalKind.normalizer)
        assert c.P.members <= qc.P.members <= n.P.members


def test_unnormalized_representative_raises(f_s4, d8):
    # a transposition subgroup that is not fully normalized in F
    reps = []
    for cls in f_s4.f_conjugacy.subgroup_classes:
        rep = f_s4.f_conjugacy.representative_for(cls[0])
        for S in cls:
            if len(f_s4.n_p(S).members) < len(f_s4.n_p(rep).members):
                reps.append(S)
    assert reps
    with pytest.raises(NotNormalizedRepresentative):
        local_subsystem(f_s4, reps[0], LocalKind.normalizer,
                        auto_normalize=False)
    # with substitution enabled the call succeeds and says so
    got = local_subsystem(f_s4, reps[0], LocalKind.normalizer)
    assert "normalized representative substituted" in got.provenance


def test_is_normal_requires_normal_in_p(f_s4, d8):
    t = next(x for x in d8.members
             if perms.order(x) == 2 and len(perms.to_cycles(x)) == 1)
    S = f_s4.subgroup_of(frozenset({perms.identity(4), t}))
    with pytest.raises(NotNormal):
        is_normal(f_s4, S)


def test_normal_subgroups_closed_under_join(f_s4):
    normals = [S for S in f_s4.subgroups
               if S.is_normal_in(f_s4.P) and is_normal(f_s4, S)]
    for A in normals:
        for B in normals:
            assert is_normal(f_s4, A.join(B))


def test_center_inside_o_p():
    for name, p in [("S4", 2), ("GL(3,2)", 2), ("SL(2,3)", 3), ("D12", 2)]:
        G = named_group(name)
        P = sylow_subgroup(G, p)
        F = fusion_system_of_group(G, P, p)
        assert center(F).members <= o_p(F).members


def test_local_subsystems_of_saturated_are_saturated(f_s4):
    for cls in f_s4.f_conjugacy.subgroup_classes:
        Q = f_s4.f_conjugacy.representative_for(cls[0])
        got = local_subsystem(f_s4, Q, LocalKind.normalizer)
        assert is_saturated(got).saturated


def test_quotient_by_o_p(f_s4):
    V = _klein(f_s4)
    quo = quotient_fusion_system(f_s4, V)
    # S4 / V4 = S3 acting on P/V4 = C2
    assert quo.P.order == 2
    assert quo.iso_count() >= 1


def test_quotient_by_trivial_is_isomorphic_copy(f_s4):
    T = f_s4.subgroup_of(frozenset({perms.identity(4)}))
    quo = quotient_fusion_system(f_s4, T)
    assert quo.P.order == f_s4.P.order
    assert quo.iso_count() == f_s4.iso_count()


def test_quotient_of_trivial_system_by_p(f_trivial_d8, d8):
    P = f_trivial_d8.subgroup_of(d8.members)
    quo = quotient_fusion_system(f_trivial_d8, P)
    assert quo.P.order == 1


def test_quotient_rejects_non_normal(f_s4, d8):
    # P itself is not normal in F_P(S4)
    P = f_s4.subgroup_of(d8.members)
    with pytest.raises(NotNormalInF):
        quotient_fusion_system(f_s4, P)
