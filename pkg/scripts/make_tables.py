"""Dump the (degree, rank) and (xpara, ypara) coefficient tables of a shape.

Usage: python scripts/make_tables.py [m] [n]  (default 5 3)
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bipartite_sandpile.core import GraphShape
from bipartite_sandpile.genfunc import (
    degree_rank_csv,
    degree_rank_table,
    xy_csv,
    xy_table,
)
from bipartite_sandpile.series import SeriesRing


def main() -> int:
    m = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    n = int(sys.argv[2]) if len(sys.argv) > 2 else 3
    shape = GraphShape(m, n)
    window = (-3, (m - 1) * (n - 1) + m * n // 2 + 2)
    print(f"# degree/rank counts on K_{{{m},{n}}}, degrees {window[0]}..{window[1]}")
    print(degree_rank_csv(degree_rank_table(shape, window), window))
    ring = SeriesRing(("x", "y"), (10, 10))
    print(f"# xpara/ypara counts on K_{{{m},{n}}}, exponents <= 10")
    print(xy_csv(xy_table(shape, ring)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
