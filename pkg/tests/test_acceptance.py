"""End-to-end acceptance gate.

Each test checks one headline capability and prints a single
"criterion N: PASS/FAIL" line so the whole gate reads at a glance
under pytest -s.
"""

import time

import pytest

from fusionsys import perms
from fusionsys.audits import run_suites
from fusionsys.classify import enumerate_saturated, is_fusion_trivial
from fusionsys.corpus import corpus_entries
from fusionsys.essential import essential_subgroups
from fusionsys.fusion import fusion_system_of_group, universal_fusion_system
from fusionsys.groups import is_isomorphic, sylow_subgroup
from fusionsys.morphisms import realize_aut_group
from fusionsys.registry import named_group, wreath_cpcp
from fusionsys.saturation import is_saturated
from fusionsys.transfer import controls_transfer, is_p_nilpotent


def _gate(n, desc):
    def deco(fn):
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {n}: FAIL - {desc}")
                raise
            print(f"criterion {n}: PASS - {desc}")
        wrapper.__name__ = fn.__name__
        return wrapper
    return deco


@_gate(1, "classify all saturated fusion systems on D8 in under 10 seconds")
def test_criterion_1_classify_d8():
    start = time.monotonic()
    result = enumerate_saturated(named_group("D8").full_subgroup, 2)
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    assert len(result) == 3
    tags = {cs.essentials.rank: cs.realization for cs in result.systems}
    assert set(tags) == {0, 1, 2}
    assert tags[1] == "S4"
    assert tags[2] == "GL(3,2)"


@_gate(2, "essential subgroups of the S4 fusion system at p = 2")
def test_criterion_2_essentials_s4():
    G = named_group("S4")
    F = fusion_system_of_group(G, sylow_subgroup(G, 2), 2)
    report = essential_subgroups(F)
    assert report.rank == 1
    rep = report.representatives[0]
    assert rep.order == 4
    assert all(perms.order(x) <= 2 for x in rep.members)
    realized = realize_aut_group(rep, F.aut_f(rep))
    assert realized.outer_quotient.group.order == 6


@_gate(3, "focal and hyperfocal theorems verified corpus-wide in under 2 min")
def test_criterion_3_focal_sweep():
    assert len(corpus_entries()) >= 25
    start = time.monotonic()
    report = run_suites(["focal"])
    assert time.monotonic() - start < 120.0
    assert report["pass"]
    assert len(report["focal"]) >= 25


@_gate(4, "five p-nilpotency criteria agree on the corpus")
def test_criterion_4_nilpotency():
    report = run_suites(["nilpotency"])
    assert report["pass"]
    assert not is_p_nilpotent(named_group("S4"), 2).verdict
    assert is_p_nilpotent(named_group("C3"), 2).verdict
    assert is_p_nilpotent(named_group("S3"), 5).verdict


@_gate(5, "four saturation definitions agree; the universal system on D8 "
          "fails with a 'P not automized' witness")
def test_criterion_5_saturation():
    report = run_suites(["saturation"])
    assert report["pass"]
    U = universal_fusion_system(sylow_subgroup(named_group("S4"), 2), 2)
    verdict = is_saturated(U, definition="all")
    assert not verdict.saturated
    assert all(not v for v in verdict.verdicts.values())
    assert verdict.witness["clause"] == "P not automized"


@_gate(6, "Burnside, Grun and Yoshida control theorems, with the S4 "
          "counterexample for control of transfer")
def test_criterion_6_control():
    report = run_suites(["control"])
    assert report["pass"]
    G = named_group("S4")
    P = sylow_subgroup(G, 2)
    assert is_isomorphic(P.as_group(), wreath_cpcp(2))
    assert not controls_transfer(G, P, P)


@_gate(7, "center pullback and Fitting decomposition on abelian Sylows")
def test_criterion_7_center():
    report = run_suites(["center"])
    assert report["pass"]
    fitting = [e for e in report["center"]
               if "fitting_decomposition" in e["checks"]]
    assert fitting


@_gate(8, "every corpus morphism factors through essential automizers "
          "in under 5 min")
def test_criterion_8_factorization():
    start = time.monotonic()
    report = run_suites(["aft"])
    assert time.monotonic() - start < 300.0
    assert report["pass"]


@_gate(9, "local subsystems match the fusion of local subgroups for "
          "groups of order up to 400")
def test_criterion_9_local():
    report = run_suites(["local"])
    assert report["pass"]
    assert len(report["local"]) >= 20


@_gate(10, "small classifier regressions: 2 systems each on C2xC2 and Q8")
def test_criterion_10_small_classifications():
    assert len(enumerate_saturated(named_group("V4").full_subgroup, 2)) == 2
    assert len(enumerate_saturated(named_group("Q8").full_subgroup, 2)) == 2
    assert is_fusion_trivial(named_group("C4xC2").full_subgroup, 2)
