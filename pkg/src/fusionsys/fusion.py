"""Fusion systems on small p-groups.

A fusion system is stored through its F-isomorphisms: for every ordered
pair of subgroups (S, U) of equal order, the set of isomorphisms S -> U
present in the category.  General hom sets Hom_F(S, T) are materialized on
demand as isomorphisms onto subgroups of T; the category axioms
(restriction, corestriction, inverses, composition closure) are enforced by
the constructors and audited by ``verify_axioms``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import (
    DifferentUnderlyingGroup,
    ForeignSubgroup,
    MapCapExceeded,
    NotPSubgroup,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    all_subgroups,
    centralizer,
    injective_hom_maps,
    normalizer,
    p_part,
)
from .morphisms import GroupMorphism, identity_morphism
from .perms import Perm


@dataclass
class FConjugacyPartition:
    """F-conjugacy classes of subgroups and of elements, with normalized
    class representatives for subgroups."""

    subgroup_classes: tuple
    element_classes: tuple
    representatives: tuple  # one normalized Subgroup per subgroup class

    def class_of_subgroup(self, S: Subgroup):
        for cls in self.subgroup_classes:
            if S in cls:
                return cls
        raise ForeignSubgroup("subgroup not in the partition")

    def class_of_element(self, x: Perm):
        for cls in self.element_classes:
            if x in cls:
                return cls
        raise ForeignSubgroup("element not in the partition")

    def representative_for(self, S: Subgroup) -> Subgroup:
        for cls, rep in zip(self.subgroup_classes, self.representatives):
            if S in cls:
                return rep
        raise ForeignSubgroup("subgroup not in the partition")


class FusionSystem:
    """A p-group P with, for each pair of subgroups, its F-morphisms."""

    def __init__(self, p: int, P: Subgroup, subgroups, isos: dict,
                 provenance: str, sylow: bool | None = None):
        self.p = p
        self.P = P
        self.subgroups = tuple(subgroups)
        self.provenance = provenance
        self.sylow = sylow
        self._by_members = {S.members: S for S in self.subgroups}
        # key: (S.members, U.members) -> frozenset[GroupMorphism]
        self._isos = {k: frozenset(v) for k, v in isos.items() if v}
        self._hom_cache: dict = {}

    # -- basic queries ------------------------------------------------------

    def subgroup_of(self, members: frozenset) -> Subgroup:
        try:
            return self._by_members[members]
        except KeyError:
            raise ForeignSubgroup("not a subgroup of the underlying p-group")

    def contains_subgroup(self, S: Subgroup) -> bool:
        return S.members in self._by_members

    def isomorphisms(self, S: Subgroup, T: Subgroup) -> frozenset:
        self.subgroup_of(S.members), self.subgroup_of(T.members)
        return self._isos.get((S.members, T.members), frozenset())

    def aut_f(self, S: Subgroup) -> frozenset:
        return self.isomorphisms(S, S)

    def all_isomorphisms(self):
        for pair, isoset in self._isos.items():
            yield from isoset

    def iso_count(self) -> int:
        return sum(len(v) for v in self._isos.values())

    def subgroups_inside(self, T: Subgroup):
        return [U for U in self.subgroups if U.members <= T.members]

    def hom_set(self, S: Subgroup, T: Subgroup) -> frozenset:
        """Hom_F(S, T): every F-isomorphism from S onto a subgroup of T,
        with codomain T."""
        key = (S.members, T.members)
        cached = self._hom_cache.get(key)
        if cached is not None:
            return cached
        self.subgroup_of(S.members), self.subgroup_of(T.members)
        out = set()
        for U in self.subgroups:
            if len(U.members) == len(S.members) and U.members <= T.members:
                for phi in self._isos.get((S.members, U.members), ()):
                    out.add(phi.with_codomain(T))
        result = frozenset(out)
        self._hom_cache[key] = result
        return result

    # -- P-local data (cached) ---------------------------------------------

    @cached_property
    def _n_p(self) -> dict:
        return {S.members: frozenset(
            g for g in self.P.members
            if all(perms.conjugate(g, x) in S.members for x in S.members))
            for S in self.subgroups}

    @cached_property
    def _c_p(self) -> dict:
        return {S.members: frozenset(
            g for g in self.P.members
            if all(perms.conjugate(g, x) == x for x in S.members))
            for S in self.subgroups}

    def n_p(self, S: Subgroup) -> Subgroup:
        return Subgroup(self.P.parent, self._n_p[S.members])

    def c_p(self, S: Subgroup) -> Subgroup:
        return Subgroup(self.P.parent, self._c_p[S.members])

    @cached_property
    def _aut_p(self) -> dict:
        """Aut_P(S) as a frozenset of map keys (image tuples on S.elements)."""
        out = {}
        for S in self.subgroups:
            keys = set()
            for g in self._n_p[S.members]:
                keys.add(tuple(perms.conjugate(g, x) for x in S.elements))
            out[S.members] = frozenset(keys)
        return out

    def aut_p_keys(self, S: Subgroup) -> frozenset:
        return self._aut_p[S.members]

    def aut_p_morphisms(self, S: Subgroup) -> frozenset:
        return frozenset(
            GroupMorphism(S, S, dict(zip(S.elements, key)), _checked=True)
            for key in self._aut_p[S.members])

    # -- F-conjugacy --------------------------------------------------------

    @cached_property
    def f_conjugacy(self) -> FConjugacyPartition:
        # subgroup classes from iso keys
        parent_of: dict = {S.members: S.members for S in self.subgroups}

        def find(x):
            while parent_of[x] != x:
                parent_of[x] = parent_of[parent_of[x]]
                x = parent_of[x]
            return x

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent_of[ra] = rb

        for (smem, tmem) in self._isos:
            union(smem, tmem)
        groups: dict = {}
        for S in self.subgroups:
            groups.setdefault(find(S.members), []).append(S)
        sub_classes = tuple(tuple(sorted(v, key=Subgroup.sort_key))
                            for v in groups.values())
        sub_classes = tuple(sorted(sub_classes, key=lambda c: c[0].sort_key()))

        reps = []
        for cls in sub_classes:
            reps.append(min(cls, key=lambda S: (-len(self._n_p[S.members]),
                                                S.sort_key())))

        # element classes from images under isomorphisms
        eparent = {x: x for x in self.P.members}

        def efind(x):
            while eparent[x] != x:
                eparent[x] = eparent[eparent[x]]
                x = eparent[x]
            return x

        def eunion(a, b):
            ra, rb = efind(a), efind(b)
            if ra != rb:
                eparent[ra] = rb

        for phi in self.all_isomorphisms():
            for x, y in phi.mapping.items():
                eunion(x, y)
        egroups: dict = {}
        for x in self.P.elements:
            egroups.setdefault(efind(x), []).append(x)
        elem_classes = tuple(sorted((tuple(sorted(v)) for v in egroups.values())))
        return FConjugacyPartition(sub_classes, elem_classes, tuple(reps))

    # -- comparisons --------------------------------------------------------

    def _check_same_P(self, other: "FusionSystem") -> None:
        if self.P.members != other.P.members or self.p != other.p:
            raise DifferentUnderlyingGroup("systems live on different p-groups")

    def leq(self, other: "FusionSystem") -> bool:
        self._check_same_P(other)
        for pair, isoset in self._isos.items():
            other_set = other._isos.get(pair, frozenset())
            if not all(any(phi.key == psi.key for psi in other_set)
                       for phi in isoset):
                return False
        return True

    def equal(self, other: "FusionSystem") -> bool:
        self._check_same_P(other)
        return self._iso_key_table() == other._iso_key_table()

    def _iso_key_table(self) -> dict:
        return {pair: frozenset(phi.key for phi in isoset)
                for pair, isoset in self._isos.items()}

    def is_trivial(self) -> bool:
        """Equal to the trivial system F_P(P)."""
        return self.equal(trivial_fusion_system_like(self))

    # -- audits -------------------------------------------------------------

    def verify_axioms(self) -> None:
        """Exhaustive audit of the category axioms: Hom_P containment,
        corestriction/inverse membership, composition and restriction
        closure."""
        for S in self.subgroups:
            assert identity_morphism(S) in self.aut_f(S)
        # Hom_P(S,T) <= Hom_F(S,T) for all pairs
        for S in self.subgroups:
            for g in self.P.members:
                img = frozenset(perms.conjugate(g, x) for x in S.members)
                U = self._by_members[img]
                key = tuple(perms.conjugate(g, x) for x in S.elements)
                assert any(phi.key == key for phi in self._isos.get(
                    (S.members, img), ())), "Hom_P not contained"
        for (smem, umem), isoset in self._isos.items():
            S = self._by_members[smem]
            for phi in isoset:
                assert phi.image_members == umem, "corestriction broken"
                inv = phi.inverse()
                assert inv in self._isos.get((umem, smem), ()), "inverse missing"
                # restriction closure
                for S2 in self.subgroups:
                    if S2.members < smem:
                        r = phi.restrict(S2).corestrict_to_image()
                        assert r in self._isos.get(
                            (S2.members, r.image_members), ()), "restriction missing"
                # composition closure
                for (s2, u2), isoset2 in self._isos.items():
                    if s2 == umem:
                        for psi in isoset2:
                            comp = psi.compose(phi)
                            assert comp in self._isos.get(
                                (smem, u2), ()), "composition missing"

    # -- serialization ------------------------------------------------------

    @cached_property
    def element_index(self) -> dict:
        return {x: i for i, x in enumerate(self.P.elements)}

    def to_json_dict(self, generators_only: bool = False) -> dict:
        idx = self.element_index
        subs = [[idx[x] for x in S.elements] for S in self.subgroups]
        sub_index = {S.members: i for i, S in enumerate(self.subgroups)}
        out = {
            "p": self.p,
            "degree": self.P.parent.degree,
            "elements": [perms.format_cycles(x) for x in self.P.elements],
            "provenance": self.provenance,
            "subgroups": subs,
        }
        if generators_only:
            gens = {}
            part = self.f_conjugacy
            for rep in part.representatives:
                i = sub_index[rep.members]
                gens[str(i)] = sorted(
                    [[idx[a] for a in phi.key]] for phi in self.aut_f(rep))
            out["aut_generators"] = gens
        else:
            iso_table = {}
            for (smem, umem), isoset in sorted(
                    self._isos.items(),
                    key=lambda kv: (sub_index[kv[0][0]], sub_index[kv[0][1]])):
                name = f"{sub_index[smem]}->{sub_index[umem]}"
                iso_table[name] = sorted([idx[a] for a in phi.key]
                                         for phi in isoset)
            out["isomorphisms"] = iso_table
        return out


# -- constructors -----------------------------------------------------------

def _conjugation_iso_table(P: Subgroup, lattice, conjugators) -> dict:
    """Iso table {(S.members, U.members): set of morphisms} induced by
    conjugation with the given elements (only maps landing inside P)."""
    by_members = {S.members: S for S in lattice}
    keys: dict = {}
    pmem = P.members
    for g in conjugators:
        cmap = {x: perms.conjugate(g, x) for x in pmem}
        for S in lattice:
            img = frozenset(cmap[x] for x in S.members)
            if img <= pmem:
                key = tuple(cmap[x] for x in S.elements)
                keys.setdefault((S.members, img), set()).add(key)
    isos: dict = {}
    for (smem, umem), keyset in keys.items():
        S, U = by_members[smem], by_members[umem]
        isos[(smem, umem)] = {
            GroupMorphism(S, U, dict(zip(S.elements, key)), _checked=True)
            for key in keyset}
    return isos


def fusion_system_of_group(G: FiniteGroup, P: Subgroup, p: int,
                           caps: Caps = DEFAULT_CAPS) -> FusionSystem:
    """F_P(G): all conjugation-induced maps between subgroups of P."""
    if not P.members <= G.element_set:
        raise ForeignSubgroup("P not inside G")
    if p_part(P.order, p) != P.order:
        raise NotPSubgroup(f"|P| = {P.order} is not a power of {p}")
    lattice = all_subgroups(P, caps=caps)
    isos = _conjugation_iso_table(P, lattice, G.elements)
    sylow = P.order == p_part(G.order, p)
    label = G.label or "G"
    return FusionSystem(p, P, lattice, isos,
                        provenance=f"from_group({label})", sylow=sylow)


def trivial_fusion_system(P: Subgroup, p: int,
                          caps: Caps = DEFAULT_CAPS) -> FusionSystem:
    """F_P(P): conjugation by elements of P only."""
    if p_part(P.order, p) != P.order:
        raise NotPSubgroup(f"|P| = {P.order} is not a power of {p}")
    lattice = all_subgroups(P, caps=caps)
    isos = _conjugation_iso_table(P, lattice, P.elements)
    return FusionSystem(p, P, lattice, isos, provenance="from_group(P)",
                        sylow=True)


def trivial_fusion_system_like(F: FusionSystem) -> FusionSystem:
    isos = _conjugation_iso_table(F.P, F.subgroups, F.P.elements)
    return FusionSystem(F.p, F.P, F.subgroups, isos,
                        provenance="from_group(P)", sylow=True)


def universal_fusion_system(P: Subgroup, p: int,
                            caps: Caps = DEFAULT_CAPS) -> FusionSystem:
    """U(P): all injective homomorphisms between subgroups of P."""
    if p_part(P.order, p) != P.order:
        raise NotPSubgroup(f"|P| = {P.order} is not a power of {p}")
    if P.order > caps.map_enum:
        raise MapCapExceeded(f"|P| = {P.order} exceeds map-enumeration cap")
    lattice = all_subgroups(P, caps=caps)
    isos: dict = {}
    for S in lattice:
        for U in lattice:
            if U.order != S.order:
                continue
            maps = injective_hom_maps(S.members, U.members)
            if maps:
                isos[(S.members, U.members)] = {
                    GroupMorphism(S, U, m, _checked=True) for m in maps}
    return FusionSystem(p, P, lattice, isos, provenance="universal")


def generated_fusion_system(P: Subgroup, seed, p: int,
                            caps: Caps = DEFAULT_CAPS,
                            provenance: str = "generated") -> FusionSystem:
    """Smallest fusion system on P containing the seed morphisms: fixpoint
    closure under Hom_P, restriction, corestriction, composition and
    inversion of isomorphisms."""
    if p_part(P.order, p) != P.order:
        raise NotPSubgroup(f"|P| = {P.order} is not a power of {p}")
    lattice = all_subgroups(P, caps=caps)
    by_members = {S.members: S for S in lattice}
    base = _conjugation_iso_table(P, lattice, P.elements)

    table: dict = {}       # (smem, umem) -> dict key -> GroupMorphism
    by_domain: dict = {}   # smem -> set of (umem, key)
    by_codomain: dict = {}
    worklist: list[GroupMorphism] = []

    def add(phi: GroupMorphism) -> None:
        smem, umem = phi.domain.members, phi.image_members
        if phi.codomain.members != umem:
            phi = phi.corestrict_to_image()
            umem = phi.codomain.members
        bucket = table.setdefault((smem, umem), {})
        if phi.key in bucket:
            return
        bucket[phi.key] = phi
        by_domain.setdefault(smem, set()).add(phi)
        by_codomain.setdefault(umem, set()).add(phi)
        worklist.append(phi)

    for isoset in base.values():
        for phi in isoset:
            add(phi)
    for phi in seed:
        if not (phi.domain.members <= P.members
                and phi.image_members <= P.members):
            raise ForeignSubgroup("seed morphism does not live inside P")
        add(phi.corestrict_to_image())

    while worklist:
        phi = worklist.pop()
        smem, umem = phi.domain.members, phi.codomain.members
        add(phi.inverse())
        # restrictions to proper subgroups of the domain
        for S2 in lattice:
            if S2.members < smem:
                add(phi.restrict(S2))
        # compositions
        for psi in list(by_domain.get(umem, ())):
            add(psi.compose(phi))
        for psi in list(by_codomain.get(smem, ())):
            add(phi.compose(psi))

    isos = {pair: set(bucket.values()) for pair, bucket in table.items()}
    return FusionSystem(p, P, lattice, isos, provenance=provenance)


def transport_system(F: FusionSystem, iota: dict, newP: Subgroup, p: int,
                     caps: Caps = DEFAULT_CAPS,
                     provenance: str | None = None) -> FusionSystem:
    """Push F along an isomorphism iota: P -> newP (an element map)."""
    lattice = all_subgroups(newP, caps=caps)
    by_members = {S.members: S for S in lattice}
    inv = {v: k for k, v in iota.items()}
    isos: dict = {}
    for (smem, umem), isoset in F._isos.items():
        new_s = frozenset(iota[x] for x in smem)
        new_u = frozenset(iota[x] for x in umem)
        S2, U2 = by_members[new_s], by_members[new_u]
        out = set()
        for phi in isoset:
            mapping = {iota[x]: iota[y] for x, y in phi.mapping.items()}
            out.add(GroupMorphism(S2, U2, mapping, _checked=True))
        isos[(new_s, new_u)] = out
    return FusionSystem(F.p, newP, lattice, isos,
                        provenance=provenance or f"transport({F.provenance})",
                        sylow=F.sylow)


def subsystem_leq(F1: FusionSystem, F2: FusionSystem) -> bool:
    return F1.leq(F2)


def subsystem_equal(F1: FusionSystem, F2: FusionSystem) -> bool:
    return F1.equal(F2)
