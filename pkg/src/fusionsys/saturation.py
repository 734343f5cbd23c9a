"""Subgroup statuses and the four equivalent saturation definitions.

Each clause of the equivalence theorem is evaluated literally and
independently; 'all' mode asserts their agreement and treats disagreement
as an implementation bug, not a mathematical outcome.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import perms
from .errors import DefinitionDisagreement, NotIsoInF
from .fusion import FusionSystem
from .groups import Subgroup, p_part
from .morphisms import GroupMorphism


@dataclass
class SubgroupStatus:
    subgroup: Subgroup
    automized: bool
    centralized: bool
    normalized: bool
    receptive: bool


@dataclass
class SaturationReport:
    verdicts: dict            # definition number (1..4) -> bool
    witness: dict | None      # failure detail for the first failed clause
    saturated: bool

    def __bool__(self) -> bool:
        return self.saturated


def n_phi(F: FusionSystem, phi: GroupMorphism) -> Subgroup:
    """N_phi = {x in N_P(S) : phi c_x phi^-1 in Aut_P(T)} for an
    F-isomorphism phi: S -> T."""
    S = F.subgroup_of(phi.domain.members)
    T = F.subgroup_of(phi.image_members)
    if phi not in F.isomorphisms(S, T) and phi.corestrict_to_image() not in F.isomorphisms(S, T):
        raise NotIsoInF("phi is not an isomorphism of F")
    aut_p_T = F.aut_p_keys(T)
    members = set()
    inv = {v: k for k, v in phi.mapping.items()}
    for x in F.n_p(S).members:
        # (phi c_x phi^-1)(t) = phi(x phi^-1(t) x^-1)
        key = tuple(phi.mapping[perms.conjugate(x, inv[t])] for t in T.elements)
        if key in aut_p_T:
            members.add(x)
    return Subgroup(F.P.parent, frozenset(members))


class _StatusComputer:
    """Per-system cache of the four flags for every subgroup."""

    def __init__(self, F: FusionSystem):
        self.F = F
        self._status: dict = {}
        self._by_domain: dict = {}
        for (dm, um), isoset in F._isos.items():
            self._by_domain.setdefault(dm, []).extend(isoset)

    def conjugates(self, S: Subgroup):
        return self.F.f_conjugacy.class_of_subgroup(S)

    def automized(self, S: Subgroup) -> bool:
        aut_f = len(self.F.aut_f(S))
        aut_p = len(self.F.aut_p_keys(S))
        return aut_p == p_part(aut_f, self.F.p)

    def centralized(self, S: Subgroup) -> bool:
        c = len(self.F._c_p[S.members])
        return all(len(self.F._c_p[T.members]) <= c for T in self.conjugates(S))

    def normalized(self, S: Subgroup) -> bool:
        n = len(self.F._n_p[S.members])
        return all(len(self.F._n_p[T.members]) <= n for T in self.conjugates(S))

    def receptive(self, T: Subgroup, with_witness: bool = False):
        """Every F-isomorphism onto T extends to its N_phi."""
        F = self.F
        for S in self.conjugates(T):
            for phi in F.isomorphisms(S, T):
                N = n_phi(F, phi)
                if N.members == S.members:
                    continue  # phi itself is the extension
                if not self._extends(phi, N):
                    if with_witness:
                        return False, {"target": T, "iso_from": S, "phi": phi}
                    return False
        if with_witness:
            return True, None
        return True

    def _extends(self, phi: GroupMorphism, N: Subgroup) -> bool:
        smem = phi.domain.members
        for psi in self._by_domain.get(N.members, ()):
            if all(psi.mapping[x] == phi.mapping[x] for x in smem):
                return True
        return False

    def status(self, S: Subgroup) -> SubgroupStatus:
        st = self._status.get(S.members)
        if st is None:
            st = SubgroupStatus(
                subgroup=S,
                automized=self.automized(S),
                centralized=self.centralized(S),
                normalized=self.normalized(S),
                receptive=self.receptive(S),
            )
            self._status[S.members] = st
        return st


_computers: dict = {}


def _computer(F: FusionSystem) -> _StatusComputer:
    comp = _computers.get(id(F))
    if comp is None or comp.F is not F:
        comp = _StatusComputer(F)
        _computers[id(F)] = comp
    return comp


def status(F: FusionSystem, S: Subgroup) -> SubgroupStatus:
    """All four flags for S, computed from first principles."""
    return _computer(F).status(F.subgroup_of(S.members))


def _definition_1(F, comp):
    """Every subgroup is F-conjugate to an automized, receptive subgroup."""
    for cls in F.f_conjugacy.subgroup_classes:
        if not any(comp.status(T).automized and comp.status(T).receptive
                   for T in cls):
            return False, {"definition": 1, "clause": "no automized+receptive conjugate",
                           "subgroup": cls[0]}
    return True, None


def _p_automized_witness(F, comp):
    if not comp.status(F.subgroup_of(F.P.members)).automized:
        return {"definition": None, "clause": "P not automized", "subgroup": F.P}
    return None


def _definition_2(F, comp):
    w = _p_automized_witness(F, comp)
    if w is not None:
        w["definition"] = 2
        return False, w
    for cls in F.f_conjugacy.subgroup_classes:
        if not any(comp.status(T).normalized and comp.status(T).receptive
                   for T in cls):
            return False, {"definition": 2, "clause": "no normalized+receptive conjugate",
                           "subgroup": cls[0]}
    return True, None


def _definition_3(F, comp):
    """P automized and every normalized subgroup receptive."""
    w = _p_automized_witness(F, comp)
    if w is not None:
        w["definition"] = 3
        return False, w
    for S in F.subgroups:
        st = comp.status(S)
        if st.normalized and not st.receptive:
            return False, {"definition": 3, "clause": "normalized but not receptive",
                           "subgroup": S}
    return True, None


def _definition_4(F, comp):
    """Normalized => centralized and automized; centralized => receptive."""
    for S in F.subgroups:
        st = comp.status(S)
        if st.normalized and not (st.centralized and st.automized):
            return False, {"definition": 4,
                           "clause": "normalized but not centralized+automized",
                           "subgroup": S}
        if st.centralized and not st.receptive:
            return False, {"definition": 4, "clause": "centralized but not receptive",
                           "subgroup": S}
    return True, None


_DEFINITIONS = {1: _definition_1, 2: _definition_2, 3: _definition_3,
                4: _definition_4}


def is_saturated(F: FusionSystem, definition: int | str = "all") -> SaturationReport:
    """Evaluate the requested saturation definition(s) literally."""
    comp = _computer(F)
    if definition == "all":
        verdicts = {}
        witness = None
        for n, fn in _DEFINITIONS.items():
            ok, w = fn(F, comp)
            verdicts[n] = ok
            if not ok and (witness is None
                           or (w["clause"] == "P not automized"
                               and witness["clause"] != "P not automized")):
                witness = w
        if len(set(verdicts.values())) != 1:
            raise DefinitionDisagreement(
                f"saturation definitions disagree: {verdicts}")
        return SaturationReport(verdicts, witness, all(verdicts.values()))
    n = int(definition)
    ok, w = _DEFINITIONS[n](F, comp)
    return SaturationReport({n: ok}, w, ok)


def witness_to_dict(report: SaturationReport, F: FusionSystem) -> dict | None:
    """Serializable failure witness (subgroup indices, morphism tables)."""
    if report.witness is None:
        return None
    idx = F.element_index
    out = {"definition": report.witness.get("definition"),
           "clause": report.witness.get("clause")}
    sub = report.witness.get("subgroup")
    if sub is not None:
        out["subgroup"] = [idx[x] for x in sub.elements]
    phi = report.witness.get("phi")
    if phi is not None:
        out["morphism"] = phi.to_dict(idx)
    return out
