"""Command-line front end emitting deterministic JSON reports.

Exit codes: 0 success, 2 usage or input error, 3 cap violation,
4 internal disagreement between supposedly equivalent computations.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__, perms
from .config import Caps, caps_from_env
from .errors import CapExceeded, FusionsysError, InternalDisagreement
from .groups import FiniteGroup, Subgroup, group_from_generators, sylow_subgroup
from .registry import named_group, registry_names


def _load_group(args, caps: Caps) -> FiniteGroup:
    from .errors import OrderCapExceeded
    if getattr(args, "file", None):
        with open(args.file) as fh:
            data = json.load(fh)
        gens = [perms.from_cycles(cyc, data["degree"], one_based=True)
                for cyc in data["generators"]]
        G = group_from_generators(data["degree"], gens,
                                  label=data.get("label", args.file))
    else:
        G = named_group(args.group)
    if G.order > caps.group_order:
        raise OrderCapExceeded(
            f"|G| = {G.order} exceeds the group order cap {caps.group_order}")
    return G


def _gen_cycles(S: Subgroup) -> list:
    from .groups import generating_sequence
    return [perms.to_cycles(g, one_based=True) for g in generating_sequence(S.members)]


def _subgroup_report(S: Subgroup) -> dict:
    return {"order": S.order, "generators": _gen_cycles(S)}


def _emit(args, payload: dict, caps: Caps) -> None:
    report = {"version": __version__, "caps": caps.as_dict()}
    report.update(payload)
    text = json.dumps(report, indent=2, sort_keys=True)
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _fusion_of(args, caps: Caps):
    from .fusion import fusion_system_of_group
    G = _load_group(args, caps)
    P = sylow_subgroup(G, args.prime)
    return G, P, fusion_system_of_group(G, P, args.prime, caps=caps)


def _cmd_compute(args, caps: Caps) -> int:
    from .essential import classify_control
    from .local import center, is_constrained, o_p
    from .saturation import is_saturated, witness_to_dict
    from .transfer import FocalKind, system_focal

    G, P, F = _fusion_of(args, caps)
    sat = is_saturated(F, definition="all")
    payload = {
        "group": G.label,
        "prime": args.prime,
        "sylow_order": P.order,
        "saturation": {"saturated": sat.saturated,
                       "verdicts": {str(k): v for k, v in sat.verdicts.items()},
                       "witness": witness_to_dict(sat, F)},
        "center": _subgroup_report(center(F)),
        "focal": _subgroup_report(system_focal(F, FocalKind.focal)),
        "o_p": _subgroup_report(o_p(F)),
        "constrained": is_constrained(F),
    }
    if sat.saturated:
        payload["hyperfocal"] = _subgroup_report(
            system_focal(F, FocalKind.hyperfocal, caps=caps))
        flags = classify_control(F, caps=caps)
        payload["control"] = {"trivial": flags.trivial,
                              "controlled": flags.controlled,
                              "constrained": flags.constrained}
    _emit(args, payload, caps)
    return 0


def _cmd_essentials(args, caps: Caps) -> int:
    from .essential import essential_subgroups
    from .morphisms import realize_aut_group

    G, P, F = _fusion_of(args, caps)
    report = essential_subgroups(F, caps=caps)
    classes = []
    for rep, cls in report.classes:
        realized = realize_aut_group(rep, F.aut_f(rep))
        classes.append({
            "representative": _subgroup_report(rep),
            "class_size": len(cls),
            "aut_f_order": realized.carrier.order,
            "out_f_order": realized.outer_quotient.group.order,
        })
    _emit(args, {"group": G.label, "prime": args.prime,
                 "rank": report.rank, "classes": classes}, caps)
    return 0


def _morphism_from_json(F, data: dict):
    """Build the F-morphism determined by generator images (1-based
    cycle lists), and locate it in the homsets."""
    from .errors import NotIsoInF
    from .groups import closure
    degree = F.P.parent.degree
    gens = [perms.from_cycles(c, degree, one_based=True)
            for c in data["domain"]]
    imgs = [perms.from_cycles(c, degree, one_based=True)
            for c in data["images"]]
    if len(gens) != len(imgs):
        raise NotIsoInF("generator and image counts differ")
    mapping = {perms.identity(degree): perms.identity(degree)}
    frontier = list(mapping)
    pairs = dict(mapping)
    for g, im in zip(gens, imgs):
        pairs[g] = im
    changed = True
    while changed:
        changed = False
        for a, fa in list(pairs.items()):
            for b, fb in list(pairs.items()):
                ab = perms.compose(a, b)
                if ab not in pairs:
                    pairs[ab] = perms.compose(fa, fb)
                    changed = True
    dom = Subgroup(F.P.parent, frozenset(pairs))
    from .morphisms import GroupMorphism
    phi = GroupMorphism(dom, F.subgroup_of(F.P.members), pairs)
    return phi


def _cmd_factorize(args, caps: Caps) -> int:
    from .essential import alperin_factorize

    G, P, F = _fusion_of(args, caps)
    data = json.loads(args.morphism)
    phi = _morphism_from_json(F, data)
    witness = alperin_factorize(F, phi, caps=caps)
    idx = F.element_index
    steps = []
    for step in witness.steps:
        steps.append({
            "subgroup": _subgroup_report(step.source),
            "automorphism": step.automorphism.to_dict(idx),
            "restricted_to": sorted(idx[x] for x in step.restricted_to.members),
        })
    _emit(args, {"group": G.label, "prime": args.prime,
                 "target": phi.to_dict(idx), "length": len(witness),
                 "steps": steps, "recomposed_exactly": True}, caps)
    return 0


def _cmd_classify(args, caps: Caps) -> int:
    from .classify import enumerate_saturated

    G = _load_group(args, caps)
    P = G.full_subgroup
    result = enumerate_saturated(P, args.prime, caps=caps)
    systems = []
    for cs in result.systems:
        systems.append({
            "morphism_count": cs.system.iso_count(),
            "essential_rank": cs.essentials.rank,
            "control": {"trivial": cs.control.trivial,
                        "controlled": cs.control.controlled,
                        "constrained": cs.control.constrained},
            "realization": cs.realization or "unrealized in registry",
        })
    payload = {"group": G.label, "prime": args.prime,
               "system_count": len(result.systems), "systems": systems}
    if args.stats:
        payload["stats"] = result.stats
    _emit(args, payload, caps)
    return 0


def _cmd_check(args, caps: Caps) -> int:
    from .audits import SUITES, run_suites

    names = list(SUITES) if args.suite == "all" else [args.suite]
    report = run_suites(names, caps=caps)
    _emit(args, report, caps)
    return 0 if report["pass"] else 1


def _cmd_registry(args, caps: Caps) -> int:
    _emit(args, {"names": registry_names()}, caps)
    return 0


def _add_group_source(sub, prime_required: bool = True) -> None:
    src = sub.add_mutually_exclusive_group(required=True)
    src.add_argument("--group", help="registry group name")
    src.add_argument("--file", help="JSON group file (1-based cycles)")
    sub.add_argument("--prime", type=int, required=prime_required)
    sub.add_argument("--output", help="write the JSON report here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusionsys",
        description="Fusion systems on small p-groups, by exhaustive computation")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("compute", help="fusion system summary of F_P(G)")
    _add_group_source(sub)
    sub = subs.add_parser("essentials", help="essential subgroup classes")
    _add_group_source(sub)
    sub = subs.add_parser("factorize",
                          help="factor a morphism through essential automizers")
    _add_group_source(sub)
    sub.add_argument("--morphism", required=True,
                     help='JSON {"domain": [cycles], "images": [cycles]}')
    sub = subs.add_parser("classify",
                          help="all saturated fusion systems on a p-group")
    _add_group_source(sub)
    sub.add_argument("--stats", action="store_true")
    sub = subs.add_parser("check", help="corpus-wide theorem audits")
    sub.add_argument("--suite", default="all",
                     choices=["all", "focal", "nilpotency", "saturation",
                              "control", "center", "aft", "local"])
    sub.add_argument("--output")
    sub = subs.add_parser("registry", help="list registry group names")
    sub.add_argument("--output")

    return parser


_COMMANDS = {
    "compute": _cmd_compute,
    "essentials": _cmd_essentials,
    "factorize": _cmd_factorize,
    "classify": _cmd_classify,
    "check": _cmd_check,
    "registry": _cmd_registry,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    caps = caps_from_env()
    try:
        return _COMMANDS[args.command](args, caps)
    except CapExceeded as exc:
        print(f"cap violation: {exc}", file=sys.stderr)
        return 3
    except InternalDisagreement as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return 4
    except (FusionsysError, FileNotFoundError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
