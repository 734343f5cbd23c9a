"""Local subsystems, the center, normality, O_p, constraint, quotients.

The three local constructions (centralizer, normalizer, Q-centralizer)
share one engine: keep exactly those morphisms of F admitting an extension
psi to QS whose behaviour on Q matches the requested kind.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import (
    NotNormal,
    NotNormalInF,
    NotNormalizedRepresentative,
)
from .fusion import FusionSystem
from .groups import Subgroup, all_subgroups, quotient_group
from .morphisms import GroupMorphism


class LocalKind(enum.Enum):
    centralizer = "centralizer"
    normalizer = "normalizer"
    q_centralizer = "q_centralizer"


def _underlying(F: FusionSystem, Q: Subgroup, kind: LocalKind) -> Subgroup:
    if kind is LocalKind.centralizer:
        return F.c_p(Q)
    if kind is LocalKind.normalizer:
        return F.n_p(Q)
    cp = F.c_p(Q)
    return Subgroup(F.P.parent, Q.product_set(cp))


def _extension_admits(F: FusionSystem, phi: GroupMorphism, Q: Subgroup,
                      kind: LocalKind, by_domain: dict) -> bool:
    """Is there psi in Hom_F(QS, QT) with psi|_S = phi and the kind's
    condition on Q?"""
    S, T = phi.domain, phi.image()
    qs = frozenset(Q.product_set(S))
    qt = Q.product_set(T)
    smem = S.members
    qmem = Q.members
    for psi in by_domain.get(qs, ()):
        if not psi.image_members <= qt:
            continue
        if any(psi.mapping[x] != phi.mapping[x] for x in smem):
            continue
        if kind is LocalKind.centralizer:
            if all(psi.mapping[q] == q for q in qmem):
                return True
        elif kind is LocalKind.normalizer:
            if frozenset(psi.mapping[q] for q in qmem) == qmem:
                return True
        else:
            if frozenset(psi.mapping[q] for q in qmem) != qmem:
                continue
            # psi|_Q must be conjugation by some element of Q
            for g in qmem:
                if all(psi.mapping[q] == perms.conjugate(g, q) for q in qmem):
                    return True
    return False


def _by_domain_index(F: FusionSystem) -> dict:
    idx: dict = {}
    for (dm, um), isoset in F._isos.items():
        idx.setdefault(dm, []).extend(isoset)
    return idx


def local_subsystem(F: FusionSystem, Q: Subgroup, kind: LocalKind,
                    auto_normalize: bool = True) -> FusionSystem:
    """C_F(Q), N_F(Q) or QC_F(Q) on its stated underlying group."""
    Q = F.subgroup_of(Q.members)
    rep = F.f_conjugacy.representative_for(Q)
    substituted = False
    if len(F.n_p(Q).members) < len(F.n_p(rep).members):
        if not auto_normalize:
            raise NotNormalizedRepresentative(
                "Q is not normalized in F; pass its class representative")
        Q = rep
        substituted = True

    R = _underlying(F, Q, kind)
    by_domain = _by_domain_index(F)
    rmem = R.members
    lattice = [S for S in F.subgroups if S.members <= rmem]
    isos: dict = {}
    for (dm, um), isoset in F._isos.items():
        if not (dm <= rmem and um <= rmem):
            continue
        kept = {phi for phi in isoset
                if _extension_admits(F, phi, Q, kind, by_domain)}
        if kept:
            isos[(dm, um)] = kept
    tag = f"local({kind.value}, |Q|={Q.order}"
    if substituted:
        tag += ", normalized representative substituted"
    tag += f") of {F.provenance}"
    return FusionSystem(F.p, R, lattice, isos, provenance=tag)


def center(F: FusionSystem) -> Subgroup:
    """Z(F): elements fixed by every morphism of F defined on them."""
    moved = set()
    for isoset in F._isos.values():
        for phi in isoset:
            for x, y in phi.mapping.items():
                if x != y:
                    moved.add(x)
    return Subgroup(F.P.parent, frozenset(F.P.members - moved))


def is_normal(F: FusionSystem, Q: Subgroup) -> bool:
    """Q is normal in F when N_F(Q) = F.  Requires Q normal in P."""
    Q = F.subgroup_of(Q.members)
    if not Q.is_normal_in(F.P):
        raise NotNormal("Q must be normal in P")
    return local_subsystem(F, Q, LocalKind.normalizer).equal(F)


def o_p(F: FusionSystem) -> Subgroup:
    """Largest normal subgroup of F (join of all of them).  Candidates are
    normal subgroups of P only, since Hom_P(S,T) sits inside Hom_F(S,T)."""
    normals = [S for S in F.subgroups
               if S.is_normal_in(F.P) and is_normal(F, S)]
    return functools.reduce(lambda a, b: a.join(b), normals)


def is_constrained(F: FusionSystem) -> bool:
    """C_P(O_p(F)) <= O_p(F)."""
    op = o_p(F)
    return F.c_p(op).members <= op.members


def quotient_fusion_system(F: FusionSystem, Q: Subgroup,
                           caps: Caps = DEFAULT_CAPS) -> FusionSystem:
    """F/Q on the permutation group of P/Q, for Q normal in F."""
    Q = F.subgroup_of(Q.members)
    if not Q.is_normal_in(F.P) or not is_normal(F, Q):
        raise NotNormalInF("Q is not normal in F")
    Pg = F.P.as_group()
    quo = quotient_group(Pg, Subgroup(Pg, Q.members))
    proj = quo.projection
    Pbar = quo.group.full_subgroup
    lattice = all_subgroups(Pbar, caps=caps)
    by_members = {S.members: S for S in lattice}
    qmem = Q.members
    isos: dict = {}
    for (dm, um), isoset in F._isos.items():
        if not qmem <= dm:
            continue
        dbar = frozenset(proj[x] for x in dm)
        for phi in isoset:
            # Q normal in F forces phi(Q) = Q, so phi descends
            ubar = frozenset(proj[phi.mapping[x]] for x in dm)
            mapping = {proj[x]: proj[phi.mapping[x]] for x in dm}
            bar = GroupMorphism(by_members[dbar], by_members[ubar], mapping,
                                _checked=True)
            isos.setdefault((dbar, ubar), set()).add(bar)
    return FusionSystem(F.p, Pbar, lattice, isos,
                        provenance=f"quotient(|Q|={Q.order}) of {F.provenance}")
