#!/usr/bin/env python3
"""Run every verification suite and print one report per suite.

Convenience wrapper around `wittkit verify --suite all` for working inside
the repo without installing the console script.  Exit code 0 means no FAIL
entries anywhere; the two documented CONFLICT entries are expected and do
not fail the run.
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from wittkit.verify import run_all  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--json-out", type=Path, default=None,
                    help="also write the full report as JSON to this path")
    args = ap.parse_args()

    t0 = time.time()
    reports = run_all(seed=args.seed, samples=args.samples)
    elapsed = time.time() - t0

    for rep in reports:
        print(rep.format_text())
        print()
    n_pass = sum(r.n_pass for r in reports)
    n_fail = sum(r.n_fail for r in reports)
    n_conflict = sum(r.n_conflict for r in reports)
    print(f"{n_pass} pass, {n_fail} fail, {n_conflict} conflict "
          f"in {elapsed:.2f}s (seed={args.seed}, samples={args.samples})")

    if args.json_out is not None:
        payload = {"seed": args.seed, "samples": args.samples,
                   "elapsed_s": round(elapsed, 3),
                   "reports": [r.to_json() for r in reports]}
        args.json_out.write_text(json.dumps(payload, indent=2) + "\n")
        print(f"wrote {args.json_out}")

    return 0 if n_fail == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
