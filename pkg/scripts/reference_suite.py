"""Print the acceptance table and write it as JSON next to the working directory."""

import argparse
import json
import sys

from zkbredon.suite import run_suite, format_row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", help="also write the rows to this file")
    args = ap.parse_args()
    rows = run_suite()
    for r in rows:
        print(format_row(r))
    passed = sum(r["pass"] for r in rows)
    print(f"\n{passed}/{len(rows)} checks pass")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1, sort_keys=True, default=str)
    return 0 if passed == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())
