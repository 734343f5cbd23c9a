"""Strongly p-embedded subgroups, essential subgroups, radical subgroups,
and factorization of fusion morphisms through essential automizers.

The factorization search is the executable form of the fusion theorem
saying every isomorphism is a composition of restricted automorphisms of
essential subgroups (p-element steps) and of P itself.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import MethodDisagreement, NoFactorization, NotSaturated, NotIsoInF
from .fusion import FusionSystem
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    all_sylow_subgroups,
    p_part,
)
from .morphisms import GroupMorphism, RealizedAutGroup, realize_aut_group


@dataclass
class EmbeddedReport:
    value: bool
    witness: Subgroup | None = None  # from the direct search, when run

    def __bool__(self) -> bool:
        return self.value


def _graph_criterion(L: FiniteGroup, p: int) -> bool:
    """Disconnectedness of the graph on Syl_p(L) with edges S ~ T iff
    S meet T is nontrivial."""
    syl = all_sylow_subgroups(L, p)
    if len(syl) <= 1:
        return False
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(len(syl)):
            if j in seen:
                continue
            if len(syl[i].members & syl[j].members) > 1:
                seen.add(j)
                frontier.append(j)
    return len(seen) < len(syl)


def _direct_search(L: FiniteGroup, p: int, caps: Caps) -> Subgroup | None:
    """First H < L with p | |H| and p coprime to |H meet H^x| off H."""
    full = L.full_subgroup
    for H in all_subgroups(full, caps=caps):
        if H.order == L.order or H.order % p != 0:
            continue
        good = True
        for x in L.elements:
            if x in H.members:
                continue
            inter = H.members & H.conjugate_by(x).members
            if len(_orders_multiple(inter, p)) > 0:
                good = False
                break
        if good:
            return H
    return None


def _orders_multiple(members, p):
    return [x for x in members if perms.order(x) % p == 0]


def has_strongly_p_embedded(L: FiniteGroup, p: int,
                            caps: Caps = DEFAULT_CAPS) -> EmbeddedReport:
    """Graph criterion, cross-validated by direct subgroup search on small L."""
    if L.order % p != 0:
        return EmbeddedReport(False)
    graph = _graph_criterion(L, p)
    if L.order <= caps.embedded_direct:
        witness = _direct_search(L, p, caps)
        if graph != (witness is not None):
            raise MethodDisagreement(
                f"graph criterion ({graph}) vs direct search "
                f"({witness is not None}) on |L| = {L.order}")
        return EmbeddedReport(graph, witness)
    return EmbeddedReport(graph)


@dataclass
class EssentialReport:
    classes: list      # list of (representative, full F-class tuple)
    rank: int

    @property
    def representatives(self) -> list:
        return [rep for rep, _ in self.classes]


def _require_saturated(F: FusionSystem) -> None:
    from .saturation import is_saturated
    if not is_saturated(F).saturated:
        raise NotSaturated("defined for saturated systems only")


def _realized_aut(F: FusionSystem, Q: Subgroup) -> RealizedAutGroup:
    return realize_aut_group(Q, F.aut_f(Q))


def essential_subgroups(F: FusionSystem,
                        caps: Caps = DEFAULT_CAPS) -> EssentialReport:
    """F-classes of essential subgroups: self-centralizing normalized Q < P
    whose Out_F(Q) has a strongly p-embedded subgroup."""
    _require_saturated(F)
    classes = []
    for cls in F.f_conjugacy.subgroup_classes:
        rep = F.f_conjugacy.representative_for(cls[0])
        if rep.members == F.P.members:
            continue
        if not F.c_p(rep).members <= rep.members:
            continue
        realized = _realized_aut(F, rep)
        out = realized.outer_quotient.group
        if has_strongly_p_embedded(out, F.p, caps=caps):
            classes.append((rep, cls))
    classes.sort(key=lambda pair: pair[0].sort_key())
    return EssentialReport(classes, len(classes))


def is_radical(F: FusionSystem, Q: Subgroup,
               caps: Caps = DEFAULT_CAPS) -> bool:
    """O_p(Aut_F(Q)) = Inn(Q)."""
    from .groups import CharacteristicKind, characteristic_subgroup
    _require_saturated(F)
    Q = F.subgroup_of(Q.members)
    realized = _realized_aut(F, Q)
    op = characteristic_subgroup(realized.carrier, CharacteristicKind.o_p,
                                 F.p, caps=caps)
    return op.members == realized.inner.members


@dataclass
class FactorizationStep:
    source: Subgroup           # essential representative or P
    automorphism: GroupMorphism
    restricted_to: Subgroup    # domain the step was actually applied on


@dataclass
class FactorizationWitness:
    target: GroupMorphism
    steps: list  # applied left to right: step k maps the image of step k-1

    def __len__(self) -> int:
        return len(self.steps)

    def recompose(self) -> GroupMorphism:
        current = None
        for step in self.steps:
            piece = step.automorphism.restrict(step.restricted_to)
            current = piece if current is None else piece.compose(
                current.corestrict_to_image())
        return current


def _step_menu(F: FusionSystem, caps: Caps):
    """Ordered (Q, automorphism, p_order) triples the search may restrict."""
    report = essential_subgroups(F, caps=caps)
    sources = [F.subgroup_of(F.P.members)] + list(report.representatives)
    menu = []
    for Q in sources:
        essential = Q.members != F.P.members
        realized = _realized_aut(F, Q)
        auts = sorted(F.aut_f(Q), key=lambda a: a.key)
        for alpha in auts:
            if essential:
                n = perms.order(realized.perm_of(alpha))
                if n != 1 and p_part(n, F.p) != n:
                    continue  # essential steps must be p-elements
            menu.append((Q, alpha))
    return menu


def alperin_factorize(F: FusionSystem, phi: GroupMorphism,
                      caps: Caps = DEFAULT_CAPS) -> FactorizationWitness:
    """Shortest composition of restricted (essential or full) automorphisms
    equal to phi, found breadth-first; recomposition is checked."""
    _require_saturated(F)
    S0 = F.subgroup_of(phi.domain.members)
    T0 = F.subgroup_of(phi.image_members)
    if phi.corestrict_to_image() not in F.isomorphisms(S0, T0):
        raise NotIsoInF("phi is not a morphism of F")
    target_key = tuple(phi.mapping[x] for x in S0.elements)
    menu = _step_menu(F, caps)

    start = tuple(S0.elements)
    queue = deque([(start, ())])
    seen = {start}
    while queue:
        key, path = queue.popleft()
        if key == target_key:
            steps = []
            for Q, alpha, dom_members in path:
                steps.append(FactorizationStep(
                    Q, alpha, Subgroup(F.P.parent, dom_members)))
            witness = FactorizationWitness(phi, steps)
            recomposed = witness.recompose() if steps else None
            if steps:
                assert tuple(recomposed.mapping[x] for x in S0.elements) \
                    == target_key, "recomposition mismatch"
            else:
                assert start == target_key
            return witness
        image = frozenset(key)
        for Q, alpha in menu:
            if not image <= Q.members:
                continue
            new_key = tuple(alpha.mapping[x] for x in key)
            if new_key in seen:
                continue
            seen.add(new_key)
            queue.append((new_key, path + ((Q, alpha, image),)))
    raise NoFactorization("no factorization found; the factorization "
                          "theorem fails only on unsaturated input")


@dataclass
class ControlFlags:
    trivial: bool
    controlled: bool
    constrained: bool


def classify_control(F: FusionSystem, caps: Caps = DEFAULT_CAPS) -> ControlFlags:
    """Trivial / controlled (no essentials) / constrained flags."""
    from .local import is_constrained
    _require_saturated(F)
    trivial = F.is_trivial()
    controlled = essential_subgroups(F, caps=caps).rank == 0
    constrained = is_constrained(F)
    if controlled:
        assert constrained, "controlled system must be constrained"
    return ControlFlags(trivial, controlled, constrained)
