import pytest

from fusionsys.corpus import corpus_fusion, corpus_sylow
from fusionsys.errors import ContainmentViolated, NotSaturated, NotSylow
from fusionsys.groups import (
    CharacteristicKind,
    characteristic_subgroup,
    normalizer,
    sylow_subgroup,
)
from fusionsys.registry import named_group
from fusionsys.transfer import (
    FocalKind,
    controls_fusion,
    controls_transfer,
    group_focal,
    grun_check,
    has_wreath_quotient,
    is_p_nilpotent,
    system_focal,
    zj_control_check,
)


def test_focal_of_s4(s4, d8):
    foc = group_focal(s4, d8, FocalKind.focal)
    hyp = group_focal(s4, d8, FocalKind.hyperfocal)
    assert foc.order == 4
    assert hyp.order == 4
    assert foc.members == hyp.members


def test_focal_of_gl32(gl32):
    P = sylow_subgroup(gl32, 2)
    foc = group_focal(gl32, P, FocalKind.focal)
    assert foc.members == P.members  # GL(3,2) is perfect


def test_system_focal_matches_group_focal(s4, d8, f_s4):
    foc = group_focal(s4, d8, FocalKind.focal)
    assert system_focal(f_s4, FocalKind.focal).members == foc.members
    hyp = group_focal(s4, d8, FocalKind.hyperfocal)
    assert system_focal(f_s4, FocalKind.hyperfocal).members == hyp.members


def test_system_hyperfocal_needs_saturation(u_d8):
    with pytest.raises(NotSaturated):
        system_focal(u_d8, FocalKind.hyperfocal)


def test_focal_needs_sylow(s4):
    from fusionsys import perms
    C4 = s4.generated_subgroup(
        [next(x for x in s4.elements if perms.order(x) == 4)])
    with pytest.raises(NotSylow):
        group_focal(s4, C4, FocalKind.focal)


def test_nilpotency_verdicts():
    expected = {
        ("S4", 2): False,
        ("S4", 3): False,
        ("A4", 2): False,
        ("SL(2,3)", 2): False,
        ("SL(2,3)", 3): True,  # Q8 is a normal 3-complement
        ("D12", 3): False,  # reflections invert the 3-element
        ("C6", 2): True,
        ("C6", 3): True,
        ("F20", 5): False,
        ("C7:C3", 7): False,
        ("C7:C3", 3): True,
    }
    for (name, p), want in expected.items():
        assert bool(is_p_nilpotent(named_group(name), p)) is want, (name, p)


def test_nilpotency_transcript_unanimous(s4):
    report = is_p_nilpotent(s4, 2)
    assert set(report.transcript.values()) == {False}
    report = is_p_nilpotent(named_group("C6"), 2)
    assert set(report.transcript.values()) == {True}


def test_p_prime_group_is_p_nilpotent():
    assert bool(is_p_nilpotent(named_group("C3"), 2))
    assert bool(is_p_nilpotent(named_group("S3"), 5))


def test_controls_fusion_examples(s4, d8):
    assert controls_fusion(s4, s4.full_subgroup, d8)
    N = normalizer(s4, d8)
    assert not controls_fusion(s4, N, d8)  # S4 fuses more than N_S4(D8) = D8
    A5 = named_group("A5")
    P5 = sylow_subgroup(A5, 5)
    assert controls_fusion(A5, normalizer(A5, P5), P5)  # Burnside, abelian P


def test_controls_transfer_s4_counterexample(s4, d8):
    # D8 has a C2 wr C2 quotient (it is one), so Yoshida does not apply,
    # and indeed P itself fails to control transfer
    assert has_wreath_quotient(d8, 2)
    assert not controls_transfer(s4, d8, d8)


def test_controls_transfer_yoshida_cases():
    for name, p in [("S4", 3), ("A5", 5), ("F20", 5), ("C7:C3", 7),
                    ("GL(3,2)", 7), ("S5", 3)]:
        G = named_group(name)
        P = sylow_subgroup(G, p)
        assert not has_wreath_quotient(P, p)
        N = normalizer(G, P)
        assert controls_transfer(G, N, P), (name, p)


def test_controls_requires_containment(s4, d8):
    with pytest.raises(ContainmentViolated):
        controls_fusion(s4, s4.trivial_subgroup, d8)


def test_grun_examples(s4, d8, gl32):
    assert grun_check(s4, d8).equal
    assert grun_check(gl32, sylow_subgroup(gl32, 2)).equal
    A5 = named_group("A5")
    rep = grun_check(A5, sylow_subgroup(A5, 2))
    assert rep.equal and rep.lhs.order == 4


def test_wreath_quotient_examples(d8):
    assert has_wreath_quotient(d8, 2)
    Q8 = named_group("Q8")
    assert not has_wreath_quotient(Q8.full_subgroup, 2)
    W3 = named_group("C3wrC3")
    assert has_wreath_quotient(W3.full_subgroup, 3)
    # order short-circuit: 7-part too small to host C7 wr C7
    P7 = sylow_subgroup(named_group("C7:C3"), 7)
    assert not has_wreath_quotient(P7, 7)


def test_zj_control_a4():
    A4 = named_group("A4")
    rep = zj_control_check(A4, sylow_subgroup(A4, 3), 3)
    assert rep.qd_free and rep.controls


def test_zj_control_qd3():
    Qd3 = named_group("Qd(3)")
    P = sylow_subgroup(Qd3, 3)
    rep = zj_control_check(Qd3, P, 3)
    assert not rep.qd_free
    assert not rep.controls


def test_zj_needs_odd_prime(s4, d8):
    with pytest.raises(NotSylow):
        zj_control_check(s4, d8, 2)


def test_hyperfocal_trivial_iff_nilpotent():
    for name, p in [("C6", 3), ("D12", 3), ("SD16", 2)]:
        G = named_group(name)
        P = sylow_subgroup(G, p)
        hyp = group_focal(G, P, FocalKind.hyperfocal)
        assert (hyp.order == 1) == bool(is_p_nilpotent(G, p))
