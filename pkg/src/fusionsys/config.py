"""Size caps for the exhaustive algorithms.

Everything in this package enumerates elements explicitly, so every entry
point is guarded by a cap with an explicit error instead of silent
truncation.  Caps can be overridden via FUSIONSYS_* environment variables.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace


@dataclass(frozen=True)
class Caps:
    group_order: int = 5000        # maximal order of an enumerated group
    subgroup_enum: int = 512       # maximal order for full subgroup lattices
    map_enum: int = 64             # maximal |S| for injective-hom enumeration
    classifier: int = 64           # maximal |P| for the saturated-system enumerator
    classifier_max: int = 128      # hard ceiling for classifier overrides
    aut_carrier: int = 20000       # maximal realized automorphism-group order
    embedded_direct: int = 2000    # maximal |L| for the direct strongly-embedded search

    def replace(self, **kw) -> "Caps":
        return replace(self, **kw)

    def as_dict(self) -> dict:
        return {
            "group_order": self.group_order,
            "subgroup_enum": self.subgroup_enum,
            "map_enum": self.map_enum,
            "classifier": self.classifier,
            "aut_carrier": self.aut_carrier,
            "embedded_direct": self.embedded_direct,
        }


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw else default


def caps_from_env() -> Caps:
    base = Caps()
    return Caps(
        group_order=_env_int("FUSIONSYS_GROUP_ORDER_CAP", base.group_order),
        subgroup_enum=_env_int("FUSIONSYS_SUBGROUP_CAP", base.subgroup_enum),
        map_enum=_env_int("FUSIONSYS_MAP_CAP", base.map_enum),
        classifier=_env_int("FUSIONSYS_CLASSIFIER_CAP", base.classifier),
        aut_carrier=_env_int("FUSIONSYS_AUT_CARRIER_CAP", base.aut_carrier),
        embedded_direct=_env_int("FUSIONSYS_EMBEDDED_CAP", base.embedded_direct),
    )


DEFAULT_CAPS = caps_from_env()
