"""Command line surface: rank, park, sort, rvector, render, enumerate,
verify-gf, bench.

Configurations travel as JSON objects {"m", "n", "a", "sink", "b"}; the
--input flag takes a file path, "-" for stdin, or the JSON text itself.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import genfunc, render
from .core import (
    Configuration,
    GraphShape,
    SandpileError,
    dumps,
    from_json_dict,
    sort_config,
    to_json_dict,
)
from .rank import parking_representative, r_vector, rank_greedy, rank_of, rank_scan
from .series import SeriesRing

USAGE_ERROR = 2
DOMAIN_ERROR = 1

DEFAULT_BENCH_SIZES = [100_000 * 2**k for k in range(8)]  # 1e5 .. 1.28e7


def _read_configuration(raw: str) -> Configuration:
    if raw.strip().startswith("{"):
        text = raw
    elif raw == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(raw, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as exc:
            raise UsageError(f"cannot read input file: {exc}")
    try:
        data = json.loads(text)
        return from_json_dict(data)
    except (json.JSONDecodeError, SandpileError) as exc:
        raise UsageError(f"malformed configuration JSON: {exc}")


class UsageError(Exception):
    pass


def _require_sink(u: Configuration) -> Configuration:
    if u.sink is None:
        raise UsageError('input configuration is missing the "sink" field')
    return u


def _emit_config(u: Configuration, fmt: str) -> str:
    if fmt == "json":
        return dumps(u)
    return "a=" + " ".join(map(str, u.a)) + f" sink={u.sink} b=" + " ".join(map(str, u.b))


# ---------------------------------------------------------------------------
# subcommands


def cmd_rank(args: argparse.Namespace) -> int:
    u = _require_sink(_read_configuration(args.input))
    park = parking_representative(u)
    value = rank_of(u)
    gaps = r_vector(park)
    report: dict = {
        "rank": value,
        "parking_sorted": to_json_dict(park),
        "r_vector": list(gaps.entries),
    }
    proof = None
    if args.check:
        greedy_value, _ = rank_greedy(u)
        scan_value = rank_scan(u)
        if not (value == greedy_value == scan_value):
            print(
                f"rank disagreement: pipeline={value} greedy={greedy_value} scan={scan_value}",
                file=sys.stderr,
            )
            return DOMAIN_ERROR
        report["checked"] = True
    if args.proof:
        _, proof = rank_greedy(u)
        report["proof"] = to_json_dict(proof.f)
    if args.format == "json":
        print(json.dumps(report))
    else:
        print(f"rank {value}")
        print("parking " + _emit_config(park, "text"))
        print("rvector " + " ".join(map(str, gaps.entries)))
        if proof is not None:
            print("proof " + _emit_config(proof.f, "text"))
    return 0


def cmd_park(args: argparse.Namespace) -> int:
    u = _require_sink(_read_configuration(args.input))
    print(_emit_config(parking_representative(u), args.format))
    return 0


def cmd_sort(args: argparse.Namespace) -> int:
    u = _read_configuration(args.input)
    print(_emit_config(sort_config(u), args.format))
    return 0


def cmd_rvector(args: argparse.Namespace) -> int:
    u = _read_configuration(args.input)
    gaps = r_vector(u)
    if args.format == "json":
        print(json.dumps(list(gaps.entries)))
    else:
        print(" ".join(map(str, gaps.entries)))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    u = _read_configuration(args.input)
    if args.cylindric:
        spec = render.cylindric_diagram(_require_sink(u))
    else:
        spec = render.diagram_of(sort_config(u), shade_intersection=args.shade)
    if args.format == "svg":
        sys.stdout.write(render.render_svg(spec))
    else:
        sys.stdout.write(render.render_text(spec))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    shape = GraphShape(args.m, args.n)
    if args.table == "xy":
        ring = SeriesRing(("x", "y"), (args.xymax, args.xymax))
        sys.stdout.write(genfunc.xy_csv(genfunc.xy_table(shape, ring)))
    else:
        window = (args.dmin, args.dmax)
        table = genfunc.degree_rank_table(shape, window)
        sys.stdout.write(genfunc.degree_rank_csv(table, window))
    return 0


def cmd_verify_gf(args: argparse.Namespace) -> int:
    report = genfunc.verify_gf(args.wmax, args.hmax, args.xymax, args.xymax)
    print(f"main identity m<={args.wmax} n<={args.hmax} xy<={args.xymax}: {report.describe()}")
    return 0 if report.ok else DOMAIN_ERROR


def generate_random_configuration(total: int, rng) -> Configuration:
    """Benchmark inputs: a,b uniform in [0,4n] / [0,4m], sink in [-mn, 3mn],
    so every pipeline stage sees nontrivial quotients."""
    m = total // 2
    n = total - m
    a = rng.choices(range(4 * n + 1), k=m - 1)
    b = rng.choices(range(4 * m + 1), k=n)
    sink = rng.randrange(-m * n, 3 * m * n + 1)
    return Configuration(GraphShape(m, n), tuple(a), sink, tuple(b))


def run_bench(sizes: list[int], seed: int, runs: int = 5) -> list[dict]:
    """Median rank_of wall time per size; each row carries the ratio to the
    previous size's median."""
    import random

    rows = []
    prev_median = None
    for total in sizes:
        rng = random.Random(seed * 1_000_003 + total)
        u = generate_random_configuration(total, rng)
        times = []
        for _ in range(runs):
            start = time.perf_counter()
            rank_of(u)
            times.append(time.perf_counter() - start)
        median = sorted(times)[len(times) // 2]
        ratio = None if prev_median is None else median / prev_median
        rows.append({"size": total, "median_sec": median, "ratio": ratio})
        prev_median = median
    return rows


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = args.sizes or DEFAULT_BENCH_SIZES
    try:
        rows = run_bench(sizes, args.seed, args.runs)
    except MemoryError:
        print("bench: allocation failure at the requested sizes", file=sys.stderr)
        return DOMAIN_ERROR
    print(f"{'m+n':>12} {'median_sec':>12} {'ratio':>8}")
    worst = 0.0
    for row in rows:
        ratio = "" if row["ratio"] is None else f"{row['ratio']:.2f}"
        print(f"{row['size']:>12} {row['median_sec']:>12.4f} {ratio:>8}")
        if row["ratio"] is not None:
            worst = max(worst, row["ratio"])
    doubling = all(b == 2 * a for a, b in zip(sizes, sizes[1:]))
    if doubling and len(sizes) > 1:
        verdict = "PASS" if worst <= 3.0 else "FAIL"
        print(f"linearity: worst doubling ratio {worst:.2f} <= 3.0 {verdict}")
        if worst > 3.0:
            return DOMAIN_ERROR
    return 0


# ---------------------------------------------------------------------------
# parser


def _sizes_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad sizes list {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmn-sandpile",
        description="Sandpile ranks and enumeration on complete bipartite graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument(
            "--input",
            "-i",
            required=True,
            help='configuration JSON: a file path, "-" for stdin, or the JSON itself',
        )

    p = sub.add_parser("rank", help="rank of a configuration (linear-time pipeline)")
    add_input(p)
    p.add_argument("--proof", action="store_true", help="include a proof for the rank")
    p.add_argument("--check", action="store_true", help="cross-run the other two algorithms")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=cmd_rank)

    p = sub.add_parser("park", help="sorted parking representative")
    add_input(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=cmd_park)

    p = sub.add_parser("sort", help="sorted form of a stable configuration")
    add_input(p)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(handler=cmd_sort)

    p = sub.add_parser("rvector", help="row-gap vector of a stable sorted configuration")
    add_input(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(handler=cmd_rvector)

    p = sub.add_parser("render", help="draw the diagram of a configuration")
    add_input(p)
    p.add_argument("--format", choices=("text", "svg"), default="text")
    p.add_argument("--cylindric", action="store_true", help="labelled cylindric strip")
    p.add_argument("--shade", action="store_true", help="shade the intersection area")
    p.set_defaults(handler=cmd_render)

    p = sub.add_parser("enumerate", help="tables over all parking sorted configurations")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--table", choices=("xy", "dr"), default="xy")
    p.add_argument("--xymax", type=int, default=10, help="exponent cap for the xy table")
    p.add_argument("--dmin", type=int, default=-3)
    p.add_argument("--dmax", type=int, default=17)
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("verify-gf", help="check the product formula for the family series")
    p.add_argument("--wmax", type=int, default=4)
    p.add_argument("--hmax", type=int, default=4)
    p.add_argument("--xymax", type=int, default=6)
    p.set_defaults(handler=cmd_verify_gf)

    p = sub.add_parser("bench", help="wall-time scaling of the rank pipeline")
    p.add_argument("--sizes", type=_sizes_list, default=None, help="comma-separated m+n values")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--runs", type=int, default=5)
    p.set_defaults(handler=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except SandpileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_ERROR


if __name__ == "__main__":
    sys.exit(main())
