#!/usr/bin/env python3
"""Scan an even range for minimal Goldbach witnesses and summarize the I distribution.

Example:
    python scripts/goldbach_scan.py --to 1000000 --report witnesses.csv
"""

import argparse
import collections
import csv
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from quadratica import goldbach


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--to", type=int, default=1_000_000)
    parser.add_argument("--report", default=None, help="CSV path (default: temp file)")
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--top", type=int, default=15, help="how many I values to show")
    args = parser.parse_args()

    report = args.report or tempfile.mktemp(suffix=".csv", prefix="goldbach_")
    summary = goldbach.verify_range(args.to, workers=args.workers, csv_path=report)
    print(f"verified {summary.count} even N in [{summary.start}, {summary.stop}] "
          f"in {summary.elapsed:.1f}s")
    print(f"largest minimal I: {summary.max_i} at N = {summary.n_at_max_i}")
    print(f"report: {report}")

    histogram = collections.Counter()
    with open(report, newline="") as handle:
        for row in csv.DictReader(handle):
            histogram[int(row["I_min"])] += 1
    print(f"\nmost common minimal I (of {len(histogram)} distinct values):")
    for i, count in histogram.most_common(args.top):
        print(f"  I = {i:>5}: {count:>8} times ({100 * count / summary.count:.2f}%)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
