"""Wall-time scaling of the rank pipeline over a doubling ladder of sizes.

Usage: python scripts/bench_rank.py [--max-exponent 7] [--runs 5] [--seed 2024]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bipartite_sandpile.cli import run_bench


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-exponent", type=int, default=7,
                        help="largest size is 1e5 * 2^k for this k")
    parser.add_argument("--runs", type=int, default=5)
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    sizes = [100_000 * 2**k for k in range(args.max_exponent + 1)]
    rows = run_bench(sizes, seed=args.seed, runs=args.runs)
    print(f"{'m+n':>12} {'median_sec':>12} {'ratio':>8}")
    worst = 0.0
    for row in rows:
        ratio = "" if row["ratio"] is None else f"{row['ratio']:.2f}"
        print(f"{row['size']:>12} {row['median_sec']:>12.4f} {ratio:>8}")
        worst = max(worst, row["ratio"] or 0.0)
    print(f"worst doubling ratio: {worst:.2f} (linear-time target: <= 3)")
    return 0 if worst <= 3.0 else 1


if __name__ == "__main__":
    sys.exit(main())
