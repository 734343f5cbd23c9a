"""Exhaustive enumeration of saturated fusion systems on a small p-group.

Generate-and-test: pick an automizer for P and automizers for candidate
essential subgroups, close up to a fusion system, keep the saturated ones,
and identify systems related by an automorphism of P.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import CapExceeded, ClassifierCapExceeded
from .essential import (
    ControlFlags,
    EssentialReport,
    classify_control,
    essential_subgroups,
    has_strongly_p_embedded,
)
from .fusion import (
    FusionSystem,
    fusion_system_of_group,
    generated_fusion_system,
    trivial_fusion_system,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    p_part,
    sylow_subgroup,
)
from .morphisms import (
    aut_P,
    automorphism_group_maps,
    realize_aut_group,
)
from .saturation import is_saturated


@dataclass
class ClassifiedSystem:
    system: FusionSystem
    essentials: EssentialReport
    control: ControlFlags
    realization: str | None = None  # registry group name, when matched


@dataclass
class ClassificationResult:
    P: Subgroup
    p: int
    systems: list
    stats: dict

    def __len__(self) -> int:
        return len(self.systems)


def _realized_full_aut(Q: Subgroup, caps: Caps):
    realized = realize_aut_group(Q, automorphism_group_maps(Q, caps=caps))
    if realized.carrier.order > caps.aut_carrier:
        raise CapExceeded(
            f"|Aut(Q)| = {realized.carrier.order} exceeds the carrier cap")
    return realized


def _essential_candidates(P: Subgroup, p: int, caps: Caps):
    """Per P-conjugacy class: Q with C_P(Q) <= Q, Q != P, and the possible
    automizer groups A <= Aut(Q) making Q essential."""
    from .groups import centralizer, normalizer

    lattice = all_subgroups(P, caps=caps)
    pg = P.as_group()
    seen_classes: set = set()
    candidates = []
    for Q in lattice:
        if Q.members == P.members or Q.order == 1:
            continue
        if Q.members in seen_classes:
            continue
        for g in P.members:
            seen_classes.add(Q.conjugate_by(g).members)
        cz = centralizer(pg, Q)
        if not cz.members <= Q.members:
            continue
        realized = _realized_full_aut(Q, caps)
        aut_p_img = realized.subgroup_for(aut_P(P, Q))
        options = []
        for A in all_subgroups(realized.carrier.full_subgroup, caps=caps):
            if not realized.inner.members <= A.members:
                continue
            if not aut_p_img.members <= A.members:
                continue
            if p_part(A.order, p) != aut_p_img.order:
                continue
            quo = realized.outer_quotient
            out_members = frozenset(quo.projection[x] for x in A.members)
            out = Subgroup(quo.group, out_members).as_group()
            if has_strongly_p_embedded(out, p, caps=caps):
                options.append(A)
        if options:
            candidates.append((Q, realized, options))
    return candidates


def _automizer_candidates(P: Subgroup, p: int, caps: Caps):
    """Subgroups B <= Aut(P) with Inn(P) as a Sylow p-subgroup."""
    realized = _realized_full_aut(P, caps)
    out = []
    for B in all_subgroups(realized.carrier.full_subgroup, caps=caps):
        if not realized.inner.members <= B.members:
            continue
        if p_part(B.order, p) != realized.inner.order:
            continue
        out.append(B)
    return realized, out


def _morphisms_of(realized, A: Subgroup):
    return [realized.tagging[a] for a in A.elements]


def _transport_key_table(F: FusionSystem, iota: dict) -> frozenset:
    """Key table of F pushed along the automorphism iota of P, as a
    comparable value."""
    out = {}
    for (sm, um), isoset in F._isos.items():
        new_s = frozenset(iota[x] for x in sm)
        new_u = frozenset(iota[x] for x in um)
        dom = tuple(sorted(new_s))
        keys = frozenset(
            tuple({iota[x]: iota[y] for x, y in phi.mapping.items()}[e]
                  for e in dom)
            for phi in isoset)
        out[(new_s, new_u)] = keys
    return frozenset(out.items())


def enumerate_saturated(P: Subgroup, p: int,
                        caps: Caps = DEFAULT_CAPS) -> ClassificationResult:
    """All saturated fusion systems on P up to Aut(P)-induced isomorphism."""
    if p_part(P.order, p) != P.order:
        from .errors import NotPSubgroup
        raise NotPSubgroup(f"|P| = {P.order} is not a power of {p}")
    if P.order > min(caps.classifier, caps.classifier_max):
        raise ClassifierCapExceeded(
            f"|P| = {P.order} exceeds the classifier cap")

    ess_candidates = _essential_candidates(P, p, caps)
    aut_realized, aut_candidates = _automizer_candidates(P, p, caps)
    aut_maps = [aut_realized.tagging[a] for a in aut_realized.carrier.elements]

    tested = 0
    kept: list[FusionSystem] = []
    kept_tables: list[set] = []
    for B in aut_candidates:
        b_seed = _morphisms_of(aut_realized, B)
        for r in range(len(ess_candidates) + 1):
            for chosen in itertools.combinations(ess_candidates, r):
                option_lists = [options for (_, _, options) in chosen]
                for picks in itertools.product(*option_lists):
                    seed = list(b_seed)
                    for (Q, realized, _), A in zip(chosen, picks):
                        seed.extend(_morphisms_of(realized, A))
                    F = generated_fusion_system(
                        P, seed, p, caps=caps,
                        provenance="classifier candidate")
                    tested += 1
                    if not is_saturated(F).saturated:
                        continue
                    table = _frozen_table(F._iso_key_table())
                    if any(table in tables for tables in kept_tables):
                        continue
                    transported = {_transport_key_table(F, beta.mapping)
                                   for beta in aut_maps}
                    kept.append(F)
                    kept_tables.append(transported)

    systems = []
    for F in kept:
        report = essential_subgroups(F, caps=caps)
        flags = classify_control(F, caps=caps)
        systems.append(ClassifiedSystem(F, report, flags,
                                        _find_realization(F, caps)))
    systems.sort(key=lambda cs: (cs.system.iso_count(),
                                 cs.essentials.rank))
    stats = {
        "essential_candidate_classes": len(ess_candidates),
        "automizer_candidates": len(aut_candidates),
        "generated_and_tested": tested,
        "saturated_up_to_iso": len(kept),
    }
    return ClassificationResult(P, p, systems, stats)


def _frozen_table(table) -> frozenset:
    return table if isinstance(table, frozenset) else frozenset(table.items())


def _find_realization(F: FusionSystem, caps: Caps) -> str | None:
    """Name of a registry group G with F isomorphic to F_P(G), if any."""
    from .fusion import transport_system
    from .groups import find_isomorphism
    from .registry import named_group, realization_scan_names

    if F.is_trivial() and F.P.order == F.P.parent.order:
        return F.P.parent.label  # F_P(P) is realized by P itself
    own = _frozen_table(F._iso_key_table())
    for name in realization_scan_names():
        try:
            G = named_group(name)
        except Exception:
            continue
        if G.order % F.P.order != 0 or G.order > caps.group_order:
            continue
        if p_part(G.order, F.p) != F.P.order:
            continue
        PG = sylow_subgroup(G, F.p)
        iota = find_isomorphism(PG.as_group(), F.P.as_group())
        if iota is None:
            continue
        FG = fusion_system_of_group(G, PG, F.p, caps=caps)
        moved = transport_system(FG, iota, F.P, F.p, caps=caps)
        if _frozen_table(moved._iso_key_table()) == own:
            return name
        # match up to an automorphism of P
        realized = _realized_full_aut(F.P, caps)
        for a in realized.carrier.elements:
            beta = realized.tagging[a]
            if _transport_key_table(moved, beta.mapping) == own:
                return name
    return None


def is_resistant(P: Subgroup, p: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """Every saturated fusion system on P is controlled."""
    result = enumerate_saturated(P, p, caps=caps)
    return all(cs.control.controlled for cs in result.systems)


def is_fusion_trivial(P: Subgroup, p: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """The only saturated fusion system on P is the trivial one."""
    result = enumerate_saturated(P, p, caps=caps)
    return len(result.systems) == 1 and result.systems[0].control.trivial
