"""Command-line entry point.

Exit codes: 0 success, 1 unreadable or invalid input, 2 bad arguments,
3 oracle disagreement.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import oracle
from .cohesion import (
    CliqueProjection,
    ClusteringVariant,
    edge_connectivity_directed,
    edge_connectivity_undirected,
    max_clique,
    node_connectivity,
)
from .centrality import betweenness
from .exceptions import PassnetError
from .geodesics import tied
from .model import PassingNetwork, binary_adjacency, build_network, load_team_record
from .pipeline import AnalysisConfig, analyze_network
from .report import export_csv, render_pitch_diagram

EXIT_OK, EXIT_INPUT, EXIT_ARGS, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(Exception):
    pass


def _options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    d = AnalysisConfig()
    g = parent.add_argument_group("analysis options")
    g.add_argument("--p", type=float, default=d.p, help="pagerank pass-away probability (default %(default)s)")
    g.add_argument("--q", type=float, default=d.q, help="pagerank free popularity (default %(default)s)")
    g.add_argument("--tol", type=float, default=d.tol, help="pagerank tolerance (default %(default)s)")
    g.add_argument("--max-iter", type=int, default=d.max_iter)
    g.add_argument("--w", type=float, default=d.w, help="weighted-closeness out-distance weight")
    g.add_argument("--tie-tol", type=float, default=d.tie_tol, help="relative tolerance for tied path lengths")
    g.add_argument(
        "--clustering-variant",
        choices=[v.value for v in ClusteringVariant],
        default=d.clustering_variant,
    )
    g.add_argument(
        "--clique-projection",
        choices=[v.value for v in CliqueProjection],
        default=d.clique_projection,
    )
    g.add_argument("--width", type=int, default=d.width, help="diagram width in pixels")
    g.add_argument("--height", type=int, default=d.height, help="diagram height in pixels")
    g.add_argument("--stroke-min", type=float, default=d.stroke_min, help="thinnest arrow (px)")
    g.add_argument("--stroke-max", type=float, default=d.stroke_max, help="thickest arrow (px)")
    g.add_argument("--color-low", default=d.color_low, help="colour of the lightest arrow, #rrggbb")
    g.add_argument("--color-high", default=d.color_high, help="colour of the heaviest arrow, #rrggbb")
    return parent


def build_parser() -> argparse.ArgumentParser:
    opts = _options()
    parser = argparse.ArgumentParser(
        prog="passnet", description="Passing-network analysis of football teams."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[opts], help="summary CSV, player CSV and pitch diagram")
    p.add_argument("fixture", type=Path)
    p.add_argument("-o", "--out", type=Path, default=Path("."), help="output directory")

    p = sub.add_parser("summary", parents=[opts], help="one summary row per fixture")
    p.add_argument("fixtures", type=Path, nargs="+")
    p.add_argument("-o", "--out", type=Path, help="CSV file (default: stdout)")

    p = sub.add_parser("render", parents=[opts], help="pitch diagram only")
    p.add_argument("fixture", type=Path)
    p.add_argument("-o", "--out", type=Path, help="SVG file (default: <fixture stem>.svg)")

    p = sub.add_parser("oracle", parents=[opts], help="cross-check against brute force (N <= 8)")
    p.add_argument("fixture", type=Path)
    return parser


def _config(args) -> AnalysisConfig:
    try:
        return AnalysisConfig(
            p=args.p,
            q=args.q,
            tol=args.tol,
            max_iter=args.max_iter,
            w=args.w,
            tie_tol=args.tie_tol,
            clustering_variant=args.clustering_variant,
            clique_projection=args.clique_projection,
            width=args.width,
            height=args.height,
            stroke_min=args.stroke_min,
            stroke_max=args.stroke_max,
            color_low=args.color_low,
            color_high=args.color_high,
        )
    except (PassnetError, ValueError) as exc:
        raise SystemExit(_usage_error(str(exc)))


def _usage_error(message: str) -> int:
    print(f"passnet: error: {message}", file=sys.stderr)
    return EXIT_ARGS


def _load(path: Path) -> PassingNetwork:
    try:
        return build_network(load_team_record(path))
    except OSError as exc:
        raise InputError(f"{path}: cannot read fixture ({exc.strerror or exc})") from exc
    except PassnetError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _analyze(net, config, path):
    try:
        return analyze_network(net, config)
    except PassnetError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _svg(net, config) -> str:
    return render_pitch_diagram(
        net,
        config.width,
        config.height,
        config.diagram_style,
        metadata={"passnet_config": config.as_dict()},
    )


def cmd_analyze(args, config) -> int:
    net = _load(args.fixture)
    result = _analyze(net, config, args.fixture)
    try:
        svg = _svg(net, config)
    except PassnetError as exc:
        raise InputError(f"{args.fixture}: {exc}") from exc
    out = args.out
    out.mkdir(parents=True, exist_ok=True)
    (out / "summary.csv").write_bytes(export_csv(result.summary))
    (out / "players.csv").write_bytes(export_csv(result.table))
    (out / f"{args.fixture.stem}.svg").write_text(svg, encoding="utf-8")
    (out / "config.json").write_text(
        json.dumps(config.as_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return EXIT_OK


def cmd_summary(args, config) -> int:
    rows = []
    for path in args.fixtures:
        rows.append(_analyze(_load(path), config, path).summary)
    data = export_csv(rows)
    print("# passnet config: " + json.dumps(config.as_dict(), sort_keys=True), file=sys.stderr)
    if args.out:
        args.out.write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


def cmd_render(args, config) -> int:
    net = _load(args.fixture)
    try:
        svg = _svg(net, config)
    except PassnetError as exc:
        raise InputError(f"{args.fixture}: {exc}") from exc
    target = args.out or Path(f"{args.fixture.stem}.svg")
    target.write_text(svg, encoding="utf-8")
    return EXIT_OK


def oracle_checks(net: PassingNetwork, config: AnalysisConfig) -> list[tuple[str, bool]]:
    """Compare the fast algorithms with brute-force enumeration on one network."""
    result = analyze_network(net, config)
    A = net.A
    n = net.n_players
    eps = binary_adjacency(net)
    e = eps.eps.tolist()
    brute = oracle.enumerate_geodesics(A)
    pc = result.paths

    d_ok = all(
        (brute.d[s][t] is None and math.isinf(pc.d[s, t]))
        or (brute.d[s][t] is not None and tied(float(brute.d[s][t]), pc.d[s, t], config.tie_tol))
        for s in range(n)
        for t in range(n)
    )
    checks = [
        ("geodesic distances", d_ok),
        ("geodesic counts", np.array_equal(pc.g, np.array(brute.g))),
        ("through-node counts", np.array_equal(pc.n_through, np.array(brute.n_through))),
    ]
    if n >= 3:
        checks.append(
            (
                "betweenness",
                bool(np.allclose(betweenness(pc), oracle.betweenness_bruteforce(A), rtol=0, atol=1e-12)),
            )
        )
    checks += [
        ("directed edge connectivity", edge_connectivity_directed(eps) == oracle.edge_connectivity_by_cuts(e, True)),
        ("undirected edge connectivity", edge_connectivity_undirected(eps) == oracle.edge_connectivity_by_cuts(e, False)),
        ("node connectivity", node_connectivity(eps) == oracle.node_connectivity_by_deletion(e)),
        (
            "maximum clique",
            max_clique(eps, config.clique_projection)
            == oracle.max_clique_bruteforce(e, config.clique_projection),
        ),
    ]
    return checks


def cmd_oracle(args, config) -> int:
    net = _load(args.fixture)
    if net.n_players > oracle.MAX_ORACLE_NODES:
        raise InputError(
            f"{args.fixture}: oracle runs only on networks with at most "
            f"{oracle.MAX_ORACLE_NODES} players (got {net.n_players})"
        )
    try:
        checks = oracle_checks(net, config)
    except PassnetError as exc:
        raise InputError(f"{args.fixture}: {exc}") from exc
    for name, ok in checks:
        print(f"{'agree   ' if ok else 'MISMATCH'} {name}")
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_MISMATCH


COMMANDS = {
    "analyze": cmd_analyze,
    "summary": cmd_summary,
    "render": cmd_render,
    "oracle": cmd_oracle,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except SystemExit as exc:
        return int(exc.code)
    except InputError as exc:
        print(f"passnet: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv: list[str] | None = None) -> int:
    return run(argv)
