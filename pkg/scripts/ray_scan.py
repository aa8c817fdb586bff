#!/usr/bin/env python3
"""Sweep the normalized cubical g-vectors along n for several (k, d) pairs.

Writes one CSV per pair and prints the dominant coordinate of the last row,
which should sit at position k+1 and creep toward 1 as n grows.

Example:
    python scripts/ray_scan.py --pairs 1:6,2:8,2:10 --extra 24 --out-dir reports/
"""

import argparse
import sys
from pathlib import Path

from polygv.qvectors import ray_convergence_report, ray_csv_lines


def parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(","):
        k, d = chunk.split(":")
        pairs.append((int(k), int(d)))
    return pairs


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", default="1:6,2:8,2:10",
                        help="comma-separated k:d pairs")
    parser.add_argument("--extra", type=int, default=24,
                        help="how far past d to push n")
    parser.add_argument("--out-dir", default="reports")
    args = parser.parse_args()

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for k, d in parse_pairs(args.pairs):
        rows = ray_convergence_report(k, d, range(d, d + args.extra + 1))
        path = out_dir / f"ray_k{k}_d{d}.csv"
        path.write_text("\n".join(ray_csv_lines(rows)) + "\n", encoding="utf-8")
        last = rows[-1]
        value = float(last.normalized[last.dominant_index - 1])
        print(
            f"(k={k}, d={d}) n={last.n}: dominant coordinate {last.dominant_index} "
            f"at {value:.6f} -> {path}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
