"""Injective homomorphisms between subgroups, stored as whole-element maps.

A morphism is a total pair table on its domain; equality and composition
are O(1)/O(|S|) and restriction is unambiguous.  Every constructed morphism
passes the exhaustive homomorphism and injectivity checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import (
    ForeignSubgroup,
    ImageNotContained,
    MapCapExceeded,
    NotAutomorphism,
    NotIsomorphism,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    Quotient,
    injective_hom_maps,
    quotient_group,
)
from .perms import Perm


class GroupMorphism:
    """An injective homomorphism between subgroups of a common parent."""

    __slots__ = ("domain", "codomain", "mapping", "_key", "_hash", "_image")

    def __init__(self, domain: Subgroup, codomain: Subgroup, mapping: dict,
                 _checked: bool = False):
        self.domain = domain
        self.codomain = codomain
        self.mapping = mapping
        self._key: tuple | None = None
        self._hash: int | None = None
        self._image: frozenset | None = None
        if not _checked:
            self._validate()

    def _validate(self) -> None:
        mem = self.domain.members
        if set(self.mapping) != set(mem):
            raise NotIsomorphism("map is not total on the domain")
        values = set(self.mapping.values())
        if len(values) != len(mem):
            raise NotIsomorphism("map is not injective")
        if not values <= self.codomain.members:
            raise ImageNotContained("image not inside the codomain")
        for a in mem:
            fa = self.mapping[a]
            for b in mem:
                if self.mapping[perms.compose(a, b)] != perms.compose(fa, self.mapping[b]):
                    raise NotIsomorphism("map is not a homomorphism")

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(self.mapping[e] for e in self.domain.elements)
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupMorphism):
            return NotImplemented
        return (self.domain.members == other.domain.members
                and self.codomain.members == other.codomain.members
                and self.key == other.key)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain.members, self.codomain.members, self.key))
        return self._hash

    def __call__(self, x: Perm) -> Perm:
        return self.mapping[x]

    def __repr__(self) -> str:
        return (f"<morphism |{self.domain.order}| -> |{self.codomain.order}| "
                f"key {self.key[:3]}...>")

    @property
    def image_members(self) -> frozenset:
        if self._image is None:
            self._image = frozenset(self.mapping.values())
        return self._image

    def image(self) -> Subgroup:
        return Subgroup(self.domain.parent, self.image_members)

    def is_isomorphism_onto_image(self) -> bool:
        return True  # injective by construction

    def is_iso(self) -> bool:
        """Bijective onto the codomain."""
        return self.image_members == self.codomain.members

    def is_identity(self) -> bool:
        return (self.domain.members == self.codomain.members
                and all(v == k for k, v in self.mapping.items()))

    def restrict(self, S: Subgroup) -> "GroupMorphism":
        if not S.members <= self.domain.members:
            raise ForeignSubgroup("restriction target not inside the domain")
        sub = {x: self.mapping[x] for x in S.members}
        return GroupMorphism(S, self.codomain, sub, _checked=True)

    def corestrict_to_image(self) -> "GroupMorphism":
        return GroupMorphism(self.domain, self.image(), dict(self.mapping),
                             _checked=True)

    def with_codomain(self, T: Subgroup) -> "GroupMorphism":
        if not self.image_members <= T.members:
            raise ImageNotContained("image not inside the new codomain")
        return GroupMorphism(self.domain, T, dict(self.mapping), _checked=True)

    def compose(self, other: "GroupMorphism") -> "GroupMorphism":
        """self after other."""
        if not other.image_members <= self.domain.members:
            raise ForeignSubgroup("composition not defined: image outside domain")
        mapping = {x: self.mapping[other.mapping[x]] for x in other.mapping}
        return GroupMorphism(other.domain, self.codomain, mapping, _checked=True)

    def inverse(self) -> "GroupMorphism":
        if not self.is_iso():
            raise NotIsomorphism("only isomorphisms invert")
        return GroupMorphism(self.codomain, self.domain,
                             {v: k for k, v in self.mapping.items()},
                             _checked=True)

    def to_dict(self, index: dict) -> dict:
        """Serialize with canonical element indices."""
        return {
            "domain": [index[x] for x in self.domain.elements],
            "codomain": [index[x] for x in self.codomain.elements],
            "pairs": sorted([index[a], index[b]] for a, b in self.mapping.items()),
        }


def identity_morphism(S: Subgroup) -> GroupMorphism:
    return GroupMorphism(S, S, {x: x for x in S.members}, _checked=True)


def hom_from_conjugation(g: Perm, S: Subgroup, T: Subgroup) -> GroupMorphism:
    mapping = {x: perms.conjugate(g, x) for x in S.members}
    if not set(mapping.values()) <= T.members:
        raise ImageNotContained("conjugate of S is not contained in T")
    return GroupMorphism(S, T, mapping, _checked=True)


def hom_P(P: Subgroup, S: Subgroup, T: Subgroup) -> frozenset:
    """Hom_P(S,T): conjugation maps c_g restricted to S, for g in P with
    gSg^-1 <= T, deduplicated as maps."""
    out = set()
    for g in P.elements:
        mapping = {x: perms.conjugate(g, x) for x in S.members}
        if set(mapping.values()) <= T.members:
            out.add(GroupMorphism(S, T, mapping, _checked=True))
    return frozenset(out)


def aut_P(P: Subgroup, S: Subgroup) -> frozenset:
    return hom_P(P, S, S)


def inner_automorphisms(Q: Subgroup) -> frozenset:
    return hom_P(Q, Q, Q)


def all_injective_homs(S: Subgroup, T: Subgroup,
                       caps: Caps = DEFAULT_CAPS) -> frozenset:
    if S.order > caps.map_enum:
        raise MapCapExceeded(f"|S| = {S.order} exceeds map-enumeration cap")
    maps = injective_hom_maps(S.members, T.members)
    return frozenset(GroupMorphism(S, T, m, _checked=True) for m in maps)


def automorphism_group_maps(Q: Subgroup, caps: Caps = DEFAULT_CAPS) -> frozenset:
    """All automorphisms of Q (as morphisms Q -> Q)."""
    return all_injective_homs(Q, Q, caps=caps)


@dataclass
class RealizedAutGroup:
    """An automorphism set of Q realized as a permutation group on Q's
    canonical element list, with inner automorphisms tracked."""

    base: Subgroup
    carrier: FiniteGroup
    tagging: dict          # carrier element -> GroupMorphism (automorphism of Q)
    inner: Subgroup        # image of Inn(Q) inside the carrier

    @cached_property
    def outer_quotient(self) -> Quotient:
        return quotient_group(self.carrier, self.inner)

    def perm_of(self, aut: GroupMorphism) -> Perm:
        idx = {x: i for i, x in enumerate(self.base.elements)}
        return tuple(idx[aut.mapping[x]] for x in self.base.elements)

    def subgroup_for(self, auts) -> Subgroup:
        return Subgroup(self.carrier, frozenset(self.perm_of(a) for a in auts))


def realize_aut_group(Q: Subgroup, auts) -> RealizedAutGroup:
    """Close ``auts`` under composition (inserting Inn(Q) and missing
    compositions silently) and realize the result on Q's element list."""
    elements = Q.elements
    idx = {x: i for i, x in enumerate(elements)}

    def as_perm(aut: GroupMorphism) -> Perm:
        if aut.domain.members != Q.members or not aut.is_iso() \
                or aut.codomain.members != Q.members:
            raise NotAutomorphism("not an automorphism of Q")
        return tuple(idx[aut.mapping[x]] for x in elements)

    table: dict[Perm, GroupMorphism] = {}
    for aut in auts:
        table[as_perm(aut)] = aut
    for aut in inner_automorphisms(Q):
        table.setdefault(as_perm(aut), aut)
    # composition closure; each new perm is tagged with the composed map
    frontier = list(table)
    while frontier:
        a = frontier.pop()
        for b in list(table):
            for c in (perms.compose(a, b), perms.compose(b, a)):
                if c not in table:
                    fa, fb = table[a], table[b]
                    comp = fa.compose(fb) if c == perms.compose(a, b) else fb.compose(fa)
                    table[c] = comp
                    frontier.append(c)
    carrier = FiniteGroup(len(elements), sorted(table), frozenset(table),
                          label=f"Aut|{Q.order}|")
    inner_perms = frozenset(as_perm(a) for a in inner_automorphisms(Q))
    return RealizedAutGroup(Q, carrier, table, Subgroup(carrier, inner_perms))
