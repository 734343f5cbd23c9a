"""Focal and hyperfocal subgroups, p-nilpotency, control of fusion and
transfer, Grun's formula, wreath-quotient and ZJ-style checks.

Every identity the theory proves is computed from the raw definitions on
both sides and compared; disagreement between provably equivalent clauses
raises, since it can only mean an implementation bug.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import (
    ClauseDisagreement,
    ContainmentViolated,
    CriterionDisagreement,
    NotSaturated,
    NotSylow,
)
from .fusion import FusionSystem, fusion_system_of_group, trivial_fusion_system
from .groups import (
    CharacteristicKind,
    FiniteGroup,
    Subgroup,
    all_sylow_subgroups,
    centralizer,
    characteristic_subgroup,
    closure,
    has_section_isomorphic,
    is_isomorphic,
    normal_subgroups,
    normalizer,
    p_part,
    quotient_group,
    sylow_subgroup,
)
from .morphisms import realize_aut_group
from .registry import quadratic_group, wreath_cpcp


class FocalKind(enum.Enum):
    focal = "focal"
    hyperfocal = "hyperfocal"


def _prime_of(P: Subgroup) -> int:
    n = P.order
    for p in range(2, n + 1):
        if n % p == 0:
            return p
    raise NotSylow("trivial subgroup has no defining prime")


def _check_sylow(G: FiniteGroup, P: Subgroup, p: int) -> None:
    if not P.members <= G.element_set:
        raise ContainmentViolated("P not inside G")
    if P.order != p_part(G.order, p):
        raise NotSylow(f"|P| = {P.order} is not the {p}-part of |G|")


def group_focal(G: FiniteGroup, P: Subgroup, kind: FocalKind) -> Subgroup:
    """From the generator definition: foc = <x y^-1 : x, y in P fused in G>,
    hyp the same with p'-element conjugators only."""
    kind = FocalKind(kind)
    p = 2
    if P.order > 1:
        p = _prime_of(P)
        _check_sylow(G, P, p)
    pmem = P.members
    gens = set()
    for g in G.elements:
        if kind is FocalKind.hyperfocal and perms.order(g) % p == 0:
            continue
        for x in pmem:
            y = perms.conjugate(g, x)
            if y in pmem:
                gens.add(perms.compose(x, perms.inverse(y)))
    return Subgroup(P.parent, closure(gens, G.degree))


def system_focal(F: FusionSystem, kind: FocalKind,
                 caps: Caps = DEFAULT_CAPS) -> Subgroup:
    """foc(F) = <phi(x)x^-1>; hyp(F) restricts phi to the p-residues of the
    realized Aut_F(Q) and needs F saturated."""
    kind = FocalKind(kind)
    gens = set()
    if kind is FocalKind.focal:
        for isoset in F._isos.values():
            for phi in isoset:
                for x, y in phi.mapping.items():
                    gens.add(perms.compose(y, perms.inverse(x)))
    else:
        from .saturation import is_saturated
        if not is_saturated(F).saturated:
            raise NotSaturated("hyp(F) is defined for saturated F")
        for Q in F.subgroups:
            realized = realize_aut_group(Q, F.aut_f(Q))
            residue = characteristic_subgroup(
                realized.carrier, CharacteristicKind.p_residue, F.p, caps=caps)
            for a in residue.members:
                phi = realized.tagging[a]
                for x, y in phi.mapping.items():
                    gens.add(perms.compose(y, perms.inverse(x)))
    return Subgroup(F.P.parent, closure(gens, F.P.parent.degree))


@dataclass
class NilpotencyReport:
    verdict: bool
    transcript: dict  # criterion name -> bool

    def __bool__(self) -> bool:
        return self.verdict


def is_p_nilpotent(G: FiniteGroup, p: int,
                   caps: Caps = DEFAULT_CAPS) -> NilpotencyReport:
    """All five equivalent p-nilpotency criteria, evaluated independently."""
    P = sylow_subgroup(G, p)
    F = fusion_system_of_group(G, P, p, caps=caps)
    no_fusion = F.equal(trivial_fusion_system(P, p, caps=caps))

    frobenius = True
    for Q in F.subgroups:
        n = normalizer(G, Q).order
        c = centralizer(G, Q).order
        if (n // c) != p_part(n // c, p):
            frobenius = False
            break

    opp = characteristic_subgroup(G, CharacteristicKind.o_p_prime, p, caps=caps)
    product = len(opp.product_set(P)) == G.order

    hyp = group_focal(G, P, FocalKind.hyperfocal)
    hyp_trivial = hyp.order == 1
    frattini = characteristic_subgroup(P, CharacteristicKind.frattini, caps=caps)
    hyp_small = hyp.members <= frattini.members

    transcript = {
        "no_fusion": no_fusion,
        "frobenius_quotients": frobenius,
        "normal_p_complement": product,
        "hyperfocal_trivial": hyp_trivial,
        "hyperfocal_in_frattini": hyp_small,
    }
    if len(set(transcript.values())) != 1:
        raise CriterionDisagreement(f"p-nilpotency criteria split: {transcript}")
    return NilpotencyReport(no_fusion, transcript)


def controls_fusion(G: FiniteGroup, K: Subgroup, P: Subgroup,
                    caps: Caps = DEFAULT_CAPS) -> bool:
    """K controls fusion in P: F_P(K) = F_P(G)."""
    p = _prime_of(P)
    _check_sylow(G, P, p)
    if not (P.members <= K.members and K.members <= G.element_set):
        raise ContainmentViolated("need P <= K <= G")
    FK = fusion_system_of_group(K.as_group(), Subgroup(K.as_group(), P.members),
                                p, caps=caps)
    FG = fusion_system_of_group(G, P, p, caps=caps)
    return FK._iso_key_table() == FG._iso_key_table()


def controls_transfer(G: FiniteGroup, H: Subgroup, P: Subgroup,
                      caps: Caps = DEFAULT_CAPS) -> bool:
    """The three equivalent clauses of Tate's theorem, each computed raw."""
    p = _prime_of(P)
    _check_sylow(G, P, p)
    if not (P.members <= H.members and H.members <= G.element_set):
        raise ContainmentViolated("need P <= H <= G")
    Hg = H.as_group()
    PH = Subgroup(Hg, P.members)
    _check_sylow(Hg, PH, p)

    foc_g = group_focal(G, P, FocalKind.focal)
    foc_h = group_focal(Hg, PH, FocalKind.focal)
    hyp_g = group_focal(G, P, FocalKind.hyperfocal)
    hyp_h = group_focal(Hg, PH, FocalKind.hyperfocal)
    phi = characteristic_subgroup(P, CharacteristicKind.frattini, caps=caps)

    clauses = {
        "focal": foc_g.members == foc_h.members,
        "hyperfocal": hyp_g.members == hyp_h.members,
        "focal_mod_frattini": (closure(foc_g.members | phi.members, G.degree)
                               == closure(foc_h.members | phi.members, G.degree)),
    }
    if len(set(clauses.values())) != 1:
        raise ClauseDisagreement(f"transfer-control clauses split: {clauses}")
    return clauses["focal"]


def _commutator_subgroup(A: Subgroup, B: Subgroup, degree: int) -> frozenset:
    gens = set()
    for a in A.members:
        ai = perms.inverse(a)
        for b in B.members:
            gens.add(perms.compose(perms.compose(a, b),
                                   perms.compose(ai, perms.inverse(b))))
    return closure(gens, degree)


@dataclass
class GrunReport:
    equal: bool
    lhs: Subgroup
    rhs: Subgroup

    def __bool__(self) -> bool:
        return self.equal


def grun_check(G: FiniteGroup, P: Subgroup) -> GrunReport:
    """foc_G(P) vs [N_G(P), P] <P meet Q' over Sylow p-subgroups Q>."""
    p = _prime_of(P)
    _check_sylow(G, P, p)
    lhs = group_focal(G, P, FocalKind.focal)
    gens = set(_commutator_subgroup(normalizer(G, P), P, G.degree))
    for Q in all_sylow_subgroups(G, p):
        qprime = characteristic_subgroup(Q, CharacteristicKind.derived)
        gens |= (P.members & qprime.members)
    rhs = Subgroup(P.parent, closure(gens, G.degree))
    return GrunReport(lhs.members == rhs.members, lhs, rhs)


def has_wreath_quotient(P: Subgroup, p: int,
                        caps: Caps = DEFAULT_CAPS) -> bool:
    """Some quotient of P is isomorphic to C_p wr C_p."""
    if P.order % p ** (p + 1) != 0:
        return False  # |C_p wr C_p| = p^(p+1) does not divide |P|
    W = wreath_cpcp(p)
    Pg = P.as_group()
    for N in normal_subgroups(Pg.full_subgroup, caps=caps):
        if P.order // N.order != W.order:
            continue
        if is_isomorphic(quotient_group(Pg, N).group, W):
            return True
    return False


@dataclass
class ZJReport:
    qd_free: bool
    controls: bool
    zjp: Subgroup


def zj_control_check(G: FiniteGroup, P: Subgroup, p: int,
                     caps: Caps = DEFAULT_CAPS) -> ZJReport:
    """Whether N_G(Z(J(P))) controls fusion in P, with Qd(p)-freeness.
    Control is only a theorem when qd_free holds; both are reported."""
    if p == 2:
        raise NotSylow("the ZJ statement needs an odd prime")
    _check_sylow(G, P, p)
    qd_order = p ** 3 * (p * p - 1)
    if G.order % qd_order != 0:
        qd_free = True
    else:
        qd_free = not has_section_isomorphic(G, quadratic_group(p), caps=caps)
    J = characteristic_subgroup(P, CharacteristicKind.thompson_j, p, caps=caps)
    ZJ = characteristic_subgroup(J, CharacteristicKind.center)
    ZJ = Subgroup(P.parent, ZJ.members)
    N = normalizer(G, ZJ)
    return ZJReport(qd_free, controls_fusion(G, N, P, caps=caps), ZJ)
