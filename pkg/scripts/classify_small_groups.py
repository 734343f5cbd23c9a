"""Classify the saturated fusion systems on a list of small p-groups.

Usage: python scripts/classify_small_groups.py [--groups D8,Q8,D16] [--prime 2]
"""

import argparse
import sys
import time

from fusionsys.classify import enumerate_saturated
from fusionsys.config import caps_from_env
from fusionsys.errors import CapExceeded
from fusionsys.registry import named_group

DEFAULT_GROUPS = "C2,C4,V4,C4xC2,C2xC2xC2,C8,D8,Q8,D16,SD16,Q16"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--groups", default=DEFAULT_GROUPS)
    parser.add_argument("--prime", type=int, default=2)
    args = parser.parse_args()

    caps = caps_from_env()
    for name in args.groups.split(","):
        P = named_group(name).full_subgroup
        start = time.monotonic()
        try:
            result = enumerate_saturated(P, args.prime, caps=caps)
        except CapExceeded as exc:
            print(f"{name:10s} skipped: {exc}")
            continue
        elapsed = time.monotonic() - start
        print(f"{name:10s} |P|={P.order:3d}  "
              f"{len(result)} saturated systems ({elapsed:.2f}s)")
        for cs in result.systems:
            tag = cs.realization or "no registry realization"
            flags = []
            if cs.control.trivial:
                flags.append("trivial")
            if cs.control.controlled:
                flags.append("controlled")
            if cs.control.constrained:
                flags.append("constrained")
            print(f"    rank {cs.essentials.rank}, "
                  f"{cs.system.iso_count()} morphisms, "
                  f"{', '.join(flags) or 'unconstrained'}; {tag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
