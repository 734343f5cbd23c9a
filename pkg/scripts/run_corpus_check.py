"""Run the theorem audit suites over the whole corpus and print a summary.

Usage: python scripts/run_corpus_check.py [--suite focal,aft] [--json out.json]
"""

import argparse
import json
import sys
import time

from fusionsys.audits import SUITES, run_suites
from fusionsys.config import caps_from_env


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--suite", default="all",
                        help="comma separated suite names, or 'all'")
    parser.add_argument("--json", help="write the full report here")
    args = parser.parse_args()

    names = list(SUITES) if args.suite == "all" else args.suite.split(",")
    caps = caps_from_env()
    report = {}
    ok = True
    for name in names:
        start = time.monotonic()
        part = run_suites([name], caps=caps)
        elapsed = time.monotonic() - start
        entries = part[name]
        bad = [e for e in entries if not e["pass"]]
        ok &= not bad
        report[name] = entries
        print(f"{name:12s} {len(entries):3d} pairs "
              f"{'ok' if not bad else 'FAIL'} ({elapsed:.1f}s)")
        for e in bad:
            failed = [k for k, v in e["checks"].items() if not v]
            print(f"  {e['group']} p={e['prime']}: {', '.join(failed)}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"pass": ok, "suites": report}, fh, indent=2,
                      sort_keys=True)
    print("all suites pass" if ok else "FAILURES above")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
