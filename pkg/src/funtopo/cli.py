"""Command-line interface.

Subcommands:
  generate   build a physical topology and write topology.json
  analyze    cluster a topology, build its functional graph, and report
             complexity plus operational metrics
  table2     summary table of cf, energy efficiency, and join messages
             across canonical cluster counts for a 20-sensor network

Exit codes: 0 success, 2 invalid arguments or exceeded exact-enumeration
budget, 3 clustering impossible because the graph is disconnected.
"""
from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import topology
from .clustering import (ClusteredNetwork, Cluster, bfs_tree, hcc_cluster,
                         leach_cluster, rotate_heads)
from .complexity import (BudgetExceededError, ComplexityProfile,
                         complexity_multi_scale, complexity_single_scale,
                         single_scale_hub_of_cliques)
from .functional import hcc_functional, leach_functional
from .metrics import (HCC, LEACH, energy_efficiency, join_message_counts,
                      join_messages)
from .topology import DisconnectedGraphError

TABLE2_CLUSTER_COUNTS = (3, 4, 5, 6, 16, 19)
TABLE2_SENSORS = 20


def _add_topology_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--grid", metavar="RxC",
                        help="grid topology with R rows and C columns")
    source.add_argument("--random", metavar="N", type=int,
                        help="N nodes placed uniformly at random")
    parser.add_argument("--radius", type=float, default=1.0,
                        help="transmission radius (default 1.0)")
    parser.add_argument("--spacing", type=float, default=1.0,
                        help="grid spacing, also sets the random region "
                             "scale (default 1.0)")
    parser.add_argument("--seed", type=int, default=0,
                        help="random seed (default 0)")
    parser.add_argument("--out", default=".", metavar="DIR",
                        help="output directory (default current)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="funtopo",
        description="Functional topologies and functional complexity of "
                    "clustered wireless sensor networks")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="write a physical topology")
    _add_topology_args(p_gen)

    p_ana = sub.add_parser("analyze", help="cluster, measure, and report")
    _add_topology_args(p_ana)
    p_ana.add_argument("--algo", choices=(LEACH, HCC), required=True,
                       help="clustering algorithm")
    p_ana.add_argument("--clusters", type=int, metavar="H",
                       help="number of cluster heads (leach)")
    p_ana.add_argument("--k", type=int, metavar="K",
                       help="target cluster size (hcc)")
    p_ana.add_argument("--scale", choices=("single", "multi"),
                       default="single", help="complexity scale mode")
    p_ana.add_argument("--estimator", choices=("exact", "sampled"),
                       default="exact", help="average-information estimator")
    p_ana.add_argument("--samples", type=int, default=10_000, metavar="M",
                       help="Monte Carlo draws per subset size "
                            "(default 10000)")
    p_ana.add_argument("--no-plot", action="store_true",
                       help="skip the SVG profile plot")

    p_tab = sub.add_parser("table2",
                           help="cf and metrics across cluster counts")
    p_tab.add_argument("--seed", type=int, default=0,
                       help="random seed (default 0)")
    p_tab.add_argument("--out", default=".", metavar="DIR",
                       help="output directory (default current)")
    p_tab.add_argument("--replications", type=int, default=20, metavar="R",
                       help="seeded head rotations averaged per row "
                            "(default 20)")
    p_tab.add_argument("--join-scenario", choices=("forming", "full"),
                       default="forming",
                       help="message column scenario: the joiner is the "
                            "twentieth sensor of a forming 19-sensor field, "
                            "or joins the full 20-sensor network "
                            "(default forming)")
    return parser


def _parse_grid(text: str, parser: argparse.ArgumentParser) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        rows, cols = (int(p) for p in parts)
    except ValueError:
        parser.error(f"--grid expects RxC with integers, got {text!r}")
    if rows < 1 or cols < 1:
        parser.error(f"--grid dimensions must be positive, got {text!r}")
    return rows, cols


def _make_topology(args, parser) -> topology.PhysicalTopology:
    if args.radius <= 0:
        parser.error(f"--radius must be positive, got {args.radius}")
    if args.spacing <= 0:
        parser.error(f"--spacing must be positive, got {args.spacing}")
    if args.grid is not None:
        rows, cols = _parse_grid(args.grid, parser)
        return topology.grid_topology(rows, cols, spacing=args.spacing,
                                      radius=args.radius)
    if args.random < 1:
        parser.error(f"--random expects a positive count, got {args.random}")
    side = math.sqrt(args.random) * args.spacing
    return topology.random_topology(args.random, side, side,
                                    radius=args.radius, seed=args.seed)


def _out_dir(args) -> Path:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_generate(args, parser) -> int:
    topo = _make_topology(args, parser)
    path = _out_dir(args) / "topology.json"
    path.write_text(topology.to_json(topo), encoding="utf-8")
    print(f"wrote {path} ({topo.node_count} nodes, {len(topo.edges)} edges)")
    return 0


def cmd_analyze(args, parser) -> int:
    if args.algo == LEACH and args.clusters is None:
        parser.error("--algo leach requires --clusters")
    if args.algo == HCC and args.k is None:
        parser.error("--algo hcc requires --k")
    if args.samples < 1:
        parser.error(f"--samples must be positive, got {args.samples}")
    topo = _make_topology(args, parser)

    if args.algo == LEACH:
        if not 1 <= args.clusters <= topo.node_count:
            parser.error(f"--clusters must be in 1..{topo.node_count}, "
                         f"got {args.clusters}")
        net = leach_cluster(topo, args.clusters, args.seed)
        func = leach_functional(net)
    else:
        if args.k < 1:
            parser.error(f"--k must be positive, got {args.k}")
        root = min(node.id for node in topo.nodes)
        tree = bfs_tree(topo, root)
        net = hcc_cluster(tree, args.k)
        func = hcc_functional(tree, net)

    if args.scale == "single":
        profile = complexity_single_scale(
            func, estimator=args.estimator, samples=args.samples,
            seed=args.seed)
        cf = profile.cf
        profiles = (profile,)
    else:
        cf, profiles = complexity_multi_scale(
            func, estimator=args.estimator, samples=args.samples,
            seed=args.seed)

    ee = energy_efficiency(func, net)
    msgs = join_messages(net, args.algo)

    out = _out_dir(args)
    metrics_path = out / "metrics.csv"
    with metrics_path.open("w", encoding="utf-8", newline="") as fh:
        fh.write("cluster_count,cf,energy_efficiency,avg_join_messages\n")
        fh.write(f"{len(net.clusters)},{cf:.6f},{ee:.6f},{msgs:.6f}\n")
    written = [metrics_path]
    for profile in profiles:
        p = out / f"profile_r{profile.scale}.csv"
        _write_profile_csv(p, profile)
        written.append(p)
    if not args.no_plot and profiles:
        p = out / "complexity.svg"
        _write_svg(p, profiles[0])
        written.append(p)

    print(f"{topo.node_count} sensors, {len(topo.edges)} physical edges; "
          f"{args.algo} formed {len(net.clusters)} clusters")
    print(f"functional graph: {func.node_count} nodes, "
          f"{len(func.edges)} edges (base station included)")
    if args.scale == "multi":
        per_scale = ", ".join(f"r={p.scale}: {p.cf:.6f}" for p in profiles)
        print(f"cf = {cf:.6f} averaged over {len(profiles)} scales "
              f"({per_scale})")
    else:
        print(f"cf = {cf:.6f} (single scale)")
    print(f"energy_efficiency = {ee:.6f}")
    print(f"avg_join_messages = {msgs:.6f}")
    for p in written:
        print(f"wrote {p}")
    return 0


def _balanced_partition(total: int, parts: int) -> list[int]:
    """Split total into parts sizes that differ by at most one, largest
    first."""
    q, rem = divmod(total, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def _block_network(sizes: list[int]) -> ClusteredNetwork:
    """Canonical network: consecutive sensor-id blocks, first id as head."""
    clusters = []
    start = 0
    for size in sizes:
        members = tuple(range(start, start + size))
        clusters.append(Cluster(head=start, members=members))
        start += size
    return ClusteredNetwork(clusters=tuple(clusters), base_station=start)


def cmd_table2(args, parser) -> int:
    if args.replications < 1:
        parser.error(
            f"--replications must be positive, got {args.replications}")
    rows = []
    for count in TABLE2_CLUSTER_COUNTS:
        sizes = _balanced_partition(TABLE2_SENSORS, count)
        profile = single_scale_hub_of_cliques(sizes)
        # the message column depends on what the joiner finds: a forming
        # field of the other 19 sensors, or the full 20-sensor network
        join_sensors = (TABLE2_SENSORS - 1 if args.join_scenario == "forming"
                        else TABLE2_SENSORS)
        forming = _block_network(_balanced_partition(join_sensors, count))
        net = _block_network(sizes)
        cf_acc, ee_acc = [], []
        msgs_num = msgs_den = 0
        for rep in range(args.replications):
            net = rotate_heads(net, args.seed + rep)
            forming = rotate_heads(forming, args.seed + rep)
            cf_acc.append(profile.cf)
            ee_acc.append(energy_efficiency(leach_functional(net), net))
            counts = join_message_counts(forming)
            msgs_num += sum(counts)
            msgs_den += len(counts)
        rows.append((count,
                     sum(cf_acc) / len(cf_acc),
                     sum(ee_acc) / len(ee_acc),
                     _truncate2(msgs_num, msgs_den)))
    path = _out_dir(args) / "table2.csv"
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write("cluster_count,cf,energy_efficiency,avg_join_messages\n")
        for count, cf, ee, msgs in rows:
            fh.write(f"{count},{cf:.6f},{ee:.6f},{msgs}\n")
    print(f"wrote {path}")
    for count, cf, ee, msgs in rows:
        print(f"clusters={count:2d} cf={cf:10.6f} ee={ee:8.6f} msgs={msgs}")
    return 0


def _truncate2(numerator: int, denominator: int) -> str:
    """Exact average numerator/denominator truncated to 2 decimals; integer
    arithmetic keeps values like 14/5 from drifting below 2.80."""
    hundredths = (100 * numerator) // denominator
    return f"{hundredths // 100}.{hundredths % 100:02d}"


def _write_profile_csv(path: Path, profile: ComplexityProfile) -> None:
    with path.open("w", encoding="utf-8", newline="") as fh:
        fh.write("j,avg_info_bits,reference_bits,abs_deviation\n")
        for j, avg, ref, dev in profile.rows():
            fh.write(f"{j},{avg:.6f},{ref:.6f},{dev:.6f}\n")


def _write_svg(path: Path, profile: ComplexityProfile) -> None:
    """Average-information profile against the linear reference, as a small
    self-contained SVG."""
    width, height = 640, 480
    ml, mr, mt, mb = 62, 18, 34, 48
    xs = sorted(profile.avg_info)
    avg = [profile.avg_info[j] for j in xs]
    ref = [profile.reference[j] for j in xs]
    ymax = max(max(avg, default=0.0), max(ref, default=0.0), 1e-9)
    x0, x1 = xs[0], xs[-1]
    span = (x1 - x0) or 1

    def px(j: float) -> float:
        return ml + (j - x0) / span * (width - ml - mr)

    def py(v: float) -> float:
        return height - mb - (v / ymax) * (height - mt - mb)

    def poly(values: list[float]) -> str:
        return " ".join(f"{px(j):.2f},{py(v):.2f}"
                        for j, v in zip(xs, values))

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.2f}" y="20" text-anchor="middle" '
        f'font-family="sans-serif" font-size="14">'
        f'information profile, scale r={profile.scale}</text>',
        f'<line x1="{ml}" y1="{height - mb}" x2="{width - mr}" '
        f'y2="{height - mb}" stroke="black"/>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{height - mb}" '
        f'stroke="black"/>',
    ]
    step = max(1, len(xs) // 10)
    for idx in range(0, len(xs), step):
        j = xs[idx]
        lines.append(f'<line x1="{px(j):.2f}" y1="{height - mb}" '
                     f'x2="{px(j):.2f}" y2="{height - mb + 5}" '
                     f'stroke="black"/>')
        lines.append(f'<text x="{px(j):.2f}" y="{height - mb + 18}" '
                     f'text-anchor="middle" font-family="sans-serif" '
                     f'font-size="11">{j}</text>')
    for tick in range(5):
        v = ymax * tick / 4
        lines.append(f'<line x1="{ml - 5}" y1="{py(v):.2f}" x2="{ml}" '
                     f'y2="{py(v):.2f}" stroke="black"/>')
        lines.append(f'<text x="{ml - 8}" y="{py(v) + 4:.2f}" '
                     f'text-anchor="end" font-family="sans-serif" '
                     f'font-size="11">{v:.2f}</text>')
    lines.append(f'<text x="{(ml + width - mr) / 2:.2f}" '
                 f'y="{height - 10}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="12">'
                 f'subset size j</text>')
    lines.append(f'<text x="16" y="{(mt + height - mb) / 2:.2f}" '
                 f'text-anchor="middle" font-family="sans-serif" '
                 f'font-size="12" transform="rotate(-90 16 '
                 f'{(mt + height - mb) / 2:.2f})">bits</text>')
    lines.append(f'<polyline fill="none" stroke="#1f77b4" stroke-width="2" '
                 f'points="{poly(avg)}"/>')
    lines.append(f'<polyline fill="none" stroke="#2ca02c" stroke-width="2" '
                 f'stroke-dasharray="6 3" points="{poly(ref)}"/>')
    legend_y = mt + 10
    lines.append(f'<line x1="{width - 230}" y1="{legend_y}" '
                 f'x2="{width - 200}" y2="{legend_y}" stroke="#1f77b4" '
                 f'stroke-width="2"/>')
    lines.append(f'<text x="{width - 194}" y="{legend_y + 4}" '
                 f'font-family="sans-serif" font-size="11">'
                 f'average information</text>')
    lines.append(f'<line x1="{width - 230}" y1="{legend_y + 18}" '
                 f'x2="{width - 200}" y2="{legend_y + 18}" stroke="#2ca02c" '
                 f'stroke-width="2" stroke-dasharray="6 3"/>')
    lines.append(f'<text x="{width - 194}" y="{legend_y + 22}" '
                 f'font-family="sans-serif" font-size="11">'
                 f'linear reference</text>')
    lines.append('</svg>')
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args, parser)
        if args.command == "analyze":
            return cmd_analyze(args, parser)
        return cmd_table2(args, parser)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
