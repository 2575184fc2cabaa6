#!/usr/bin/env python3
"""Run the cross-check sweep from the command line.

Equivalent to `cwekit verify` but importable as a plain script:
    python scripts/verify_sweep.py --qmax 64 [--threads 4]
Exits nonzero on any mismatch between closed forms and oracles.
"""

from __future__ import annotations

import argparse
import sys
import time

from cwekit.verify import run_verification


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qmax", type=int, default=64)
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    start = time.time()
    report = run_verification(args.qmax, threads=args.threads)
    for entry in report["results"]:
        flags = [f"factorization={entry['factorization']}"]
        flags += [
            f"N={c['N']}:{c['cwe']}/{c['hamming']}/{c['p_s']}" for c in entry["codes"]
        ]
        print(f"q={entry['q']:>3}  " + "  ".join(flags))
    print(f"status: {report['status']}  ({time.time() - start:.1f}s)")
    return 0 if report["status"] == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
