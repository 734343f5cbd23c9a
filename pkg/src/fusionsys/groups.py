"""Finite permutation groups with fully enumerated element sets.

Everything here is desk-scale (order cap 5000 by default), so groups carry
their complete element set and all computations are exhaustive: centralizers
and normalizers are pointwise scans, Sylow subgroups grow through normalizer
chains, subgroup lattices come from join closure of cyclic subgroups, and
isomorphisms are found by generator-image backtracking with order-census
pruning.  No stabilizer chains, by design.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, Optional

from . import perms
from .config import Caps, DEFAULT_CAPS
from .errors import (
    ElementOutsideH,
    ForeignSubgroup,
    MalformedPermutation,
    MissingPrime,
    NotIsomorphism,
    NotNormal,
    OrderCapExceeded,
    SubgroupCapExceeded,
)
from .perms import Perm


def p_part(n: int, p: int) -> int:
    m = 1
    while n % p == 0:
        n //= p
        m *= p
    return m


def closure(gens: Iterable[Perm], degree: int, cap: int | None = None) -> frozenset:
    """Subgroup generated by ``gens``: word closure under composition."""
    elems = {perms.identity(degree)}
    frontier = [g for g in gens if g not in elems]
    elems.update(frontier)
    gens = list(dict.fromkeys(gens))
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = perms.compose(x, g)
                if y not in elems:
                    elems.add(y)
                    new.append(y)
                    if cap is not None and len(elems) > cap:
                        raise OrderCapExceeded(
                            f"group closure exceeded cap {cap}"
                        )
        frontier = new
    return frozenset(elems)


class FiniteGroup:
    """A permutation group with its full element set enumerated."""

    def __init__(self, degree: int, generators: Iterable[Perm],
                 elements: frozenset, label: str | None = None):
        self.degree = degree
        self.generators = tuple(dict.fromkeys(generators))
        self.elements = tuple(sorted(elements))
        self.element_set = frozenset(elements)
        self.order = len(self.element_set)
        self.label = label
        self.identity = perms.identity(degree)
        self._order_of: dict[Perm, int] = {}
        self._hash: int | None = None

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"<{name}: degree {self.degree}, order {self.order}>"

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.degree, self.element_set))
        return self._hash

    def __contains__(self, x: Perm) -> bool:
        return x in self.element_set

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def mul(self, a: Perm, b: Perm) -> Perm:
        return perms.compose(a, b)

    def inv(self, a: Perm) -> Perm:
        return perms.inverse(a)

    def order_of(self, x: Perm) -> int:
        n = self._order_of.get(x)
        if n is None:
            n = perms.order(x)
            self._order_of[x] = n
        return n

    @cached_property
    def order_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for x in self.elements:
            n = self.order_of(x)
            census[n] = census.get(n, 0) + 1
        return census

    @cached_property
    def conjugacy_classes(self) -> tuple[frozenset, ...]:
        seen: set[Perm] = set()
        classes = []
        for x in self.elements:
            if x in seen:
                continue
            cls = frozenset(perms.conjugate(g, x) for g in self.elements)
            seen.update(cls)
            classes.append(cls)
        return tuple(classes)

    def is_abelian(self) -> bool:
        gens = self.generators or self.elements
        return all(perms.compose(a, b) == perms.compose(b, a)
                   for a in gens for b in gens)

    # -- subgroup handles ---------------------------------------------------

    def subgroup(self, members: Iterable[Perm]) -> "Subgroup":
        members = frozenset(members)
        if not members <= self.element_set:
            raise ForeignSubgroup("members not contained in the group")
        for a in members:
            if perms.inverse(a) not in members:
                raise ForeignSubgroup("member set not closed under inversion")
        return Subgroup(self, members)

    def generated_subgroup(self, gens: Iterable[Perm]) -> "Subgroup":
        gens = list(gens)
        for g in gens:
            if g not in self.element_set:
                raise ForeignSubgroup("generator outside the group")
        return Subgroup(self, closure(gens, self.degree))

    @cached_property
    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, frozenset([self.identity]))

    @cached_property
    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, self.element_set)


@dataclass(frozen=True)
class Subgroup:
    """An element subset of a parent group, closed under the operation."""

    parent: FiniteGroup
    members: frozenset

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def elements(self) -> tuple:
        return tuple(sorted(self.members))

    def __contains__(self, x: Perm) -> bool:
        return x in self.members

    def __iter__(self) -> Iterator[Perm]:
        return iter(self.elements)

    def __le__(self, other: "Subgroup") -> bool:
        return self.members <= other.members

    def __lt__(self, other: "Subgroup") -> bool:
        return self.members < other.members

    def __repr__(self) -> str:
        return f"<subgroup of order {self.order} in {self.parent.label or 'group'}>"

    def sort_key(self) -> tuple:
        return (self.order, self.elements)

    def conjugate_by(self, g: Perm) -> "Subgroup":
        return Subgroup(self.parent, frozenset(perms.conjugate(g, x) for x in self.members))

    def join(self, other: "Subgroup") -> "Subgroup":
        if self.parent is not other.parent and self.parent != other.parent:
            raise ForeignSubgroup("join across different parents")
        return Subgroup(self.parent, closure(self.members | other.members, self.parent.degree))

    def meet(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.members & other.members)

    def is_normal_in(self, other: "Subgroup") -> bool:
        return all(perms.conjugate(g, x) in self.members
                   for g in other.members for x in self.members)

    def as_group(self, label: str | None = None) -> FiniteGroup:
        gens = generating_sequence(self.members) or [self.parent.identity]
        return FiniteGroup(self.parent.degree, gens, self.members,
                           label=label or f"sub{self.order}")

    def product_set(self, other: "Subgroup") -> frozenset:
        return frozenset(perms.compose(a, b) for a in self.members for b in other.members)


# -- construction -----------------------------------------------------------

def group_from_generators(degree: int, gens: Iterable[Perm],
                          label: str | None = None,
                          caps: Caps = DEFAULT_CAPS) -> FiniteGroup:
    gens = [perms.check(g, degree) for g in gens]
    elems = closure(gens, degree, cap=caps.group_order)
    return FiniteGroup(degree, gens, elems, label=label)


def generating_sequence(members: frozenset) -> list[Perm]:
    """A short generating sequence: repeatedly adjoin the canonically first
    element of maximal order outside the current closure."""
    if not members:
        return []
    degree = len(next(iter(members)))
    current: frozenset = frozenset([perms.identity(degree)])
    gens: list[Perm] = []
    remaining = sorted(members)
    while current != members:
        best = None
        best_order = 0
        for x in remaining:
            if x in current:
                continue
            n = perms.order(x)
            if n > best_order:
                best, best_order = x, n
        gens.append(best)
        current = closure(gens, degree)
        remaining = [x for x in remaining if x not in current]
    return gens


# -- pointwise subgroup operations -----------------------------------------

def _coerce_members(G: FiniteGroup, S: Subgroup) -> frozenset:
    if not S.members <= G.element_set:
        raise ForeignSubgroup("subgroup not contained in the ambient group")
    return S.members


def centralizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    mem = _coerce_members(G, S)
    cent = frozenset(g for g in G.elements
                     if all(perms.conjugate(g, x) == x for x in mem))
    return Subgroup(G, cent)


def normalizer(G: FiniteGroup, S: Subgroup) -> Subgroup:
    mem = _coerce_members(G, S)
    norm = frozenset(g for g in G.elements
                     if all(perms.conjugate(g, x) in mem for x in mem))
    return Subgroup(G, norm)


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """First-found Sylow p-subgroup, deterministic in the canonical element
    order: grow a p-subgroup through its normalizer until the p-part of |G|
    is reached."""
    target = p_part(G.order, p)
    S = G.trivial_subgroup
    while S.order < target:
        N = normalizer(G, S)
        grown = False
        for g in N.elements:
            if g in S.members:
                continue
            n = G.order_of(g)
            if p_part(n, p) != n:
                continue
            bigger = closure(set(S.members) | {g}, G.degree)
            if p_part(len(bigger), p) == len(bigger):
                S = Subgroup(G, bigger)
                grown = True
                break
        if not grown:  # cannot happen for correct input; guard against loops
            raise AssertionError("sylow growth stalled")
    return S


def all_sylow_subgroups(G: FiniteGroup, p: int) -> list[Subgroup]:
    P = sylow_subgroup(G, p)
    seen = {P.members}
    out = [P]
    for g in G.elements:
        T = P.conjugate_by(g)
        if T.members not in seen:
            seen.add(T.members)
            out.append(T)
    return sorted(out, key=Subgroup.sort_key)


def all_subgroups(P: Subgroup, caps: Caps = DEFAULT_CAPS,
                  cap: int | None = None) -> list[Subgroup]:
    """Every subgroup of P exactly once, sorted by (order, member list).

    Join closure starting from cyclic subgroups; generator lists ride along
    so joins stay cheap.
    """
    limit = cap if cap is not None else caps.subgroup_enum
    if P.order > limit:
        raise SubgroupCapExceeded(f"|P| = {P.order} exceeds lattice cap {limit}")
    degree = P.parent.degree
    ident = P.parent.identity
    cyclics: dict[frozenset, tuple] = {}
    for x in P.elements:
        mem = closure([x], degree)
        if mem not in cyclics:
            cyclics[mem] = (x,)
    subs: dict[frozenset, tuple] = {frozenset([ident]): ()}
    subs.update(cyclics)
    worklist = list(subs.items())
    while worklist:
        mem, gens = worklist.pop()
        for cmem, cgens in cyclics.items():
            if cmem <= mem:
                continue
            joined = closure(gens + cgens, degree)
            if joined not in subs:
                jgens = gens + cgens
                subs[joined] = jgens
                worklist.append((joined, jgens))
    out = [Subgroup(P.parent, mem) for mem in subs]
    out.sort(key=Subgroup.sort_key)
    return out


def normal_subgroups(P: Subgroup, caps: Caps = DEFAULT_CAPS) -> list[Subgroup]:
    return [S for S in all_subgroups(P, caps=caps) if S.is_normal_in(P)]


# -- characteristic subgroups ----------------------------------------------

class CharacteristicKind(str, Enum):
    derived = "derived"
    frattini = "frattini"
    center = "center"
    o_p = "o_p"
    o_p_prime = "o_p_prime"
    p_residue = "p_residue"
    thompson_j = "thompson_j"
    omega_1 = "omega_1"


_PRIMED_KINDS = {CharacteristicKind.o_p, CharacteristicKind.o_p_prime,
                 CharacteristicKind.p_residue, CharacteristicKind.omega_1}


def normal_closure_of(G: FiniteGroup, seed: Iterable[Perm]) -> frozenset:
    """Smallest normal subgroup of G containing the seed."""
    elems = closure(seed, G.degree)
    while True:
        extra = set()
        for g in G.generators:
            for x in elems:
                y = perms.conjugate(g, x)
                if y not in elems:
                    extra.add(y)
        if not extra:
            return elems
        elems = closure(set(elems) | extra, G.degree)


def characteristic_subgroup(G: FiniteGroup | Subgroup, kind: CharacteristicKind,
                            p: int | None = None,
                            caps: Caps = DEFAULT_CAPS) -> Subgroup:
    """Brute-force characteristic subgroups; each kind computed literally
    from its definition."""
    kind = CharacteristicKind(kind)
    if kind in _PRIMED_KINDS and p is None:
        raise MissingPrime(f"kind {kind.value} needs a prime")
    if isinstance(G, Subgroup):
        ambient = G.parent
        S = G
        group = G.as_group()
    else:
        ambient = G
        S = G.full_subgroup
        group = G

    if kind is CharacteristicKind.derived:
        comms = {perms.compose(perms.compose(a, b),
                               perms.compose(perms.inverse(a), perms.inverse(b)))
                 for a in S.members for b in S.members}
        return Subgroup(ambient, closure(comms, ambient.degree))

    if kind is CharacteristicKind.center:
        cent = frozenset(x for x in S.members
                         if all(perms.conjugate(g, x) == x for g in S.members))
        return Subgroup(ambient, cent)

    if kind is CharacteristicKind.frattini:
        lattice = all_subgroups(Subgroup(group, S.members), caps=caps)
        proper = [T for T in lattice if T.order < S.order]
        maximal = [T for T in proper
                   if not any(T.members < U.members for U in proper)]
        mem = S.members
        for T in maximal:
            mem = mem & T.members
        return Subgroup(ambient, frozenset(mem))

    if kind is CharacteristicKind.p_residue:
        pprime = [x for x in S.members if group.order_of(x) % p != 0]
        return Subgroup(ambient, closure(pprime, ambient.degree))

    if kind is CharacteristicKind.omega_1:
        elems = [x for x in S.members
                 if group.order_of(x) == p or group.order_of(x) == 1]
        return Subgroup(ambient, closure(elems, ambient.degree))

    if kind in (CharacteristicKind.o_p, CharacteristicKind.o_p_prime):
        want_p = kind is CharacteristicKind.o_p
        gens = []
        for cls in group.conjugacy_classes:
            x = next(iter(cls))
            nc = normal_closure_of(group, [x])
            n = len(nc)
            if (want_p and p_part(n, p) == n) or (not want_p and n % p != 0):
                gens.extend(cls)
        return Subgroup(ambient, closure(gens, ambient.degree))

    if kind is CharacteristicKind.thompson_j:
        lattice = all_subgroups(Subgroup(group, S.members), caps=caps)
        abelian = [T for T in lattice
                   if all(perms.compose(a, b) == perms.compose(b, a)
                          for a in T.members for b in T.members)]
        top = max(T.order for T in abelian)
        gens: set = set()
        for T in abelian:
            if T.order == top:
                gens |= T.members
        return Subgroup(ambient, closure(gens, ambient.degree))

    raise AssertionError(f"unhandled kind {kind}")


# -- quotients --------------------------------------------------------------

@dataclass
class Quotient:
    """A faithful permutation realization of G/N (left action on cosets),
    with the projection recorded."""

    source: FiniteGroup
    kernel: Subgroup
    group: FiniteGroup
    projection: dict
    cosets: tuple  # sorted element tuples, index = point of the quotient action

    def project(self, x: Perm) -> Perm:
        return self.projection[x]

    def preimage(self, q: Perm) -> list:
        return [x for x in self.source.elements if self.projection[x] == q]

    def preimage_set(self, qs: Iterable[Perm]) -> frozenset:
        qs = set(qs)
        return frozenset(x for x in self.source.elements if self.projection[x] in qs)


def quotient_group(G: FiniteGroup, N: Subgroup) -> Quotient:
    if not N.members <= G.element_set:
        raise ForeignSubgroup("kernel not inside the group")
    if not all(perms.conjugate(g, x) in N.members
               for g in G.generators for x in N.members):
        raise NotNormal("subgroup is not normal")
    coset_of: dict[Perm, int] = {}
    cosets: list[tuple] = []
    for g in G.elements:
        if g in coset_of:
            continue
        coset = sorted(perms.compose(g, n) for n in N.members)
        idx = len(cosets)
        cosets.append(tuple(coset))
        for c in coset:
            coset_of[c] = idx
    # canonical point order: sort cosets lexicographically
    order_map = sorted(range(len(cosets)), key=lambda i: cosets[i])
    rank = {old: new for new, old in enumerate(order_map)}
    cosets_sorted = tuple(cosets[i] for i in order_map)
    coset_of = {c: rank[i] for c, i in coset_of.items()}
    m = len(cosets_sorted)
    projection: dict[Perm, Perm] = {}
    qelems: set[Perm] = set()
    for g in G.elements:
        img = tuple(coset_of[perms.compose(g, c[0])] for c in cosets_sorted)
        projection[g] = img
        qelems.add(img)
    qgens = [projection[g] for g in G.generators] or [perms.identity(m)]
    quot = FiniteGroup(m, qgens, frozenset(qelems),
                       label=f"{G.label or 'G'}/N{N.order}")
    return Quotient(G, N, quot, projection, cosets_sorted)


# -- fusion in groups -------------------------------------------------------

def are_fused(H: Subgroup, G: FiniteGroup, x: Perm, y: Perm) -> str:
    """Verdict in {"conjugate_in_H", "fused", "not_conjugate"} by exhaustive
    conjugation search in H, then in G."""
    if x not in H.members or y not in H.members:
        raise ElementOutsideH("both elements must lie in H")
    if any(perms.conjugate(h, x) == y for h in H.members):
        return "conjugate_in_H"
    if any(perms.conjugate(g, x) == y for g in G.elements):
        return "fused"
    return "not_conjugate"


# -- generator-image backtracking ------------------------------------------

def injective_hom_maps(S_members: frozenset, T_members: frozenset,
                       *, first_only: bool = False) -> list[dict]:
    """All injective homomorphisms from the subgroup with element set
    S_members into the one with T_members, as element maps.

    Backtracking over a short generating sequence of the domain with
    order-preservation pruning; partial maps are closed under products as
    they grow, so every yielded map is a verified homomorphism.
    """
    if len(S_members) > len(T_members):
        return []
    degree_s = len(next(iter(S_members)))
    gens = generating_sequence(S_members)
    ident_s = perms.identity(degree_s)
    if not gens:
        degree_t = len(next(iter(T_members)))
        return [{ident_s: perms.identity(degree_t)}]
    t_by_order: dict[int, list] = {}
    for t in sorted(T_members):
        t_by_order.setdefault(perms.order(t), []).append(t)

    results: list[dict] = []

    def extend(pmap: dict, g: Perm, t: Perm) -> dict | None:
        m = dict(pmap)
        if g in m:
            return m if m[g] == t else None
        m[g] = t
        frontier = [g]
        while frontier:
            a = frontier.pop()
            fa = m[a]
            for b, fb in list(m.items()):
                for x, y in ((perms.compose(a, b), perms.compose(fa, fb)),
                             (perms.compose(b, a), perms.compose(fb, fa))):
                    known = m.get(x)
                    if known is None:
                        m[x] = y
                        frontier.append(x)
                    elif known != y:
                        return None
        if len(set(m.values())) != len(m):
            return None
        return m

    def backtrack(i: int, pmap: dict) -> bool:
        if i == len(gens):
            results.append(pmap)
            return first_only
        g = gens[i]
        for t in t_by_order.get(perms.order(g), ()):
            m = extend(pmap, g, t)
            if m is not None and backtrack(i + 1, m):
                return True
        return False

    degree_t = len(next(iter(T_members)))
    backtrack(0, {ident_s: perms.identity(degree_t)})
    return results


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[dict]:
    """An isomorphism G -> H as an element map, or None."""
    if G.order != H.order or G.order_census != H.order_census:
        return None
    maps = injective_hom_maps(G.element_set, H.element_set, first_only=True)
    return maps[0] if maps else None


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


def has_section_isomorphic(G: FiniteGroup, H: FiniteGroup,
                           caps: Caps = DEFAULT_CAPS) -> bool:
    """True iff some subgroup quotient of G is isomorphic to H."""
    if G.order % H.order != 0:
        return False  # Lagrange: a section's order divides |G|
    if G.order > caps.group_order:
        raise OrderCapExceeded(f"|G| = {G.order} exceeds cap {caps.group_order}")
    lattice = all_subgroups(G.full_subgroup, caps=caps)
    for sub in lattice:
        if sub.order % H.order != 0:
            continue
        if sub.order == H.order:
            if is_isomorphic(sub.as_group(), H):
                return True
            continue
        sub_grp = sub.as_group()
        for N in normal_subgroups(sub_grp.full_subgroup, caps=caps):
            if sub.order // N.order != H.order:
                continue
            if is_isomorphic(quotient_group(sub_grp, N).group, H):
                return True
    return False


# -- regular-representation realization ------------------------------------

def regular_representation(H: FiniteGroup) -> dict:
    """h -> the permutation of H's canonical element list given by left
    multiplication."""
    index = {x: i for i, x in enumerate(H.elements)}
    return {h: tuple(index[perms.compose(h, x)] for x in H.elements)
            for h in H.elements}


def regular_embedding_conjugator(H: FiniteGroup, phi: "GroupMorphism") -> Perm:
    """A permutation of the point set H extending phi such that conjugation
    by it carries the regular representation of x to that of phi(x).

    Built from a matched pair of right-coset transversals of the domain and
    image; the conjugation identity is verified exhaustively before
    returning.
    """
    X = phi.domain.members
    Y = frozenset(phi.mapping.values())
    if len(Y) != len(X) or not phi.is_isomorphism_onto_image():
        raise NotIsomorphism("phi must be an isomorphism between subgroups of H")
    if not (X <= H.element_set and Y <= H.element_set):
        raise NotIsomorphism("phi must live inside H")
    index = {x: i for i, x in enumerate(H.elements)}

    def right_cosets(members: frozenset) -> list[tuple]:
        seen: set = set()
        cosets = []
        for g in H.elements:  # canonical order; identity's coset comes first
            if g in seen:
                continue
            coset = frozenset(perms.compose(m, g) for m in members)
            seen |= coset
            cosets.append((g, coset))
        return cosets

    xcosets = right_cosets(X)
    ycosets = right_cosets(Y)
    # Pair the coset X itself with the coset Y, choosing phi(xrep) as its
    # transversal point so that the extension restricts to phi on X.
    xhome = next(i for i, (_, c) in enumerate(xcosets) if H.identity in c)
    yhome = next(i for i, (_, c) in enumerate(ycosets) if H.identity in c)
    pairs = [(xcosets[xhome][0], phi.mapping[xcosets[xhome][0]])]
    pairs += [(xr, yr) for (xr, _), (yr, _) in
              zip((c for i, c in enumerate(xcosets) if i != xhome),
                  (c for i, c in enumerate(ycosets) if i != yhome))]
    hat = [0] * H.order
    for xrep, yrep in pairs:
        for x in X:
            src = perms.compose(x, xrep)
            dst = perms.compose(phi.mapping[x], yrep)
            hat[index[src]] = index[dst]
    hat_perm = tuple(hat)

    sigma = regular_representation(H)
    for x in X:
        if perms.conjugate(hat_perm, sigma[x]) != sigma[phi.mapping[x]]:
            raise AssertionError("regular embedding conjugation identity failed")
    return hat_perm
