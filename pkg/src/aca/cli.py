"""Command-line interface: generate, game, replay, convert-gml.

Exit codes: 0 success, 2 usage error, 3 data error, 4 runtime failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .game import (
    GameConfig,
    GameRecord,
    assign_temperatures,
    defender_select,
    make_config_detectors,
    select_targets_with_labels,
)
from .graph import GraphParseError, load_edge_list_indexed, load_gml
from .harness.manifest import RunManifest
from .harness.registry import DATASETS, DatasetError, resolve_dataset
from .harness.runio import (
    replay_record,
    write_curves_csv,
    write_report_specs,
    write_tradeoff_csv,
)
from .metrics import delta_homophily, heterophilicity
from .rng import substream, substream_seed
from .synth import (
    SynthConfig,
    build_attribute_profile,
    generate,
    generate_attributes,
    laplacian_bisection,
    reduce_homophily,
    write_bundle,
)

DEFAULT_DETECTORS = ["louvain", "leiden", "cp", "hlc", "umst", "bp"]
DEFAULT_ATTACKS = ["cl", "ss", "emb", "mod", "bih"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aca",
                                     description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a synthetic dataset bundle")
    gen.add_argument("--model", required=True,
                     choices=["er", "ws", "ba", "lfr", "mag"])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--avg-degree", type=float, default=10.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out-dir", required=True)
    gen.add_argument("--beta", type=float, help="WS rewiring probability")
    gen.add_argument("--mu", type=float, help="LFR mixing parameter")
    gen.add_argument("--delta-frac", type=float, default=1.0,
                     help="target Delta as a fraction of the bisection's")
    gen.add_argument("--max-swap-steps", type=int, default=20000)
    gen.add_argument("--attr-accuracy", type=float,
                     help="calibrate and emit binary attributes at this GLRT accuracy")

    game = sub.add_parser("game", help="play the detector-vs-attacker game")
    game.add_argument("--data", required=True, help=f"dataset name: {sorted(DATASETS)}")
    game.add_argument("--data-dir", help="dataset root (or env ACA_DATA_DIR)")
    game.add_argument("--budget", type=int, default=None,
                      help="attack budget (default 50; 51 with --capability ss-nbr)")
    game.add_argument("--targets", type=int, default=10)
    game.add_argument("--seed", type=int, default=0)
    game.add_argument("--detectors", default=",".join(DEFAULT_DETECTORS))
    game.add_argument("--attacks", default=",".join(DEFAULT_ATTACKS))
    game.add_argument("--capability", action="append", default=[],
                      choices=["ss-nbr", "epa"],
                      help="enable a gated attack capability (repeatable)")
    game.add_argument("--attack-prob-grid",
                      help="comma-separated attack probabilities for the tradeoff sweep")
    game.add_argument("--force-hot-target", action="store_true")
    game.add_argument("--out-dir", required=True)
    game.add_argument("--workers", type=int, default=1,
                      help="parallel (detector,target) evaluations")

    rep = sub.add_parser("replay", help="re-execute a run's plans and verify")
    rep.add_argument("run_dir", help="directory holding manifest.json")
    rep.add_argument("--data-dir", help="unused; runs are self-contained")

    conv = sub.add_parser("convert-gml", help="convert a GML file to an edge list")
    conv.add_argument("input")
    conv.add_argument("output")
    conv.add_argument("--labels-out", help="write node,label CSV here")
    return parser


def cmd_generate(args) -> int:
    params = {}
    if args.beta is not None:
        params["beta"] = args.beta
    if args.mu is not None:
        params["mu"] = args.mu
    cfg = SynthConfig(model=args.model, n=args.n,
                      target_avg_degree=args.avg_degree,
                      model_params=params, seed=args.seed)
    manifest = RunManifest(command="generate", config=vars(args).copy(),
                           seed=args.seed)
    graph = generate(cfg)
    labels = laplacian_bisection(graph, seed=substream_seed(args.seed, "bisection"))
    delta0 = delta_homophily(graph, labels)
    target_delta = int(round(delta0 * args.delta_frac))
    labels, report = reduce_homophily(graph, labels, target_delta,
                                      args.max_swap_steps,
                                      substream(args.seed, "swaps"))
    h = heterophilicity(graph, labels)
    attrs = None
    meta = {
        "model": cfg.model, "n": cfg.n, "avg_degree": cfg.target_avg_degree,
        "model_params": cfg.model_params, "seed": cfg.seed,
        "lcc_nodes": graph.n, "lcc_edges": graph.num_edges,
        "realized_avg_degree": round(2 * graph.num_edges / graph.n, 4),
        "initial_delta": delta0, "target_delta": target_delta,
        "achieved_delta": report.achieved_delta, "swap_steps": report.steps,
        "swap_stop_reason": report.stop_reason, "heterophilicity": h,
    }
    if args.attr_accuracy is not None:
        profile = build_attribute_profile(args.attr_accuracy,
                                          substream(args.seed, "attr-profile"))
        attrs = generate_attributes(labels, profile,
                                    substream(args.seed, "attr-rows"))
        meta["attr_shift"] = profile.shift
        meta["attr_glrt_accuracy"] = profile.measured_accuracy
        meta["attr_target_accuracy"] = profile.target_accuracy
    out = Path(args.out_dir)
    paths = write_bundle(out, graph, labels=labels, attributes=attrs, meta=meta)
    manifest.outputs = paths
    manifest.finish()
    manifest.write(out)
    print(f"generated {cfg.model} n={graph.n} m={graph.num_edges} "
          f"avg_degree={meta['realized_avg_degree']}")
    print(f"delta: initial={delta0} achieved={report.achieved_delta} "
          f"({report.steps} swaps, {report.stop_reason})")
    print(f"heterophilicity: {h:.4f}")
    if args.attr_accuracy is not None:
        print(f"attribute GLRT accuracy: {meta['attr_glrt_accuracy']:.3f} "
              f"(shift {meta['attr_shift']})")
    return 0


def cmd_game(args) -> int:
    ds = resolve_dataset(args.data, args.data_dir)
    g = ds.graph
    strategies = [s.strip() for s in args.attacks.split(",") if s.strip()]
    for cap in args.capability:
        if cap == "ss-nbr" and "ss-nbr" not in strategies:
            strategies.append("ss-nbr")
        if cap == "epa" and "epa" not in strategies:
            strategies.append("epa")
    budget = args.budget
    if budget is None:
        budget = 51 if "ss-nbr" in args.capability else 50
    detector_names = [d.strip() for d in args.detectors.split(",") if d.strip()]
    detectors = make_config_detectors(detector_names, args.seed)
    targets, effective_labels = select_targets_with_labels(
        g, ds.labels, args.targets, substream_seed(args.seed, "targets"))
    temps = {t: assign_temperatures(g, t, effective_labels, args.seed,
                                    force_hot_target=args.force_hot_target)
             for t in targets}
    config = GameConfig(detectors=detectors, targets=targets,
                        strategies=strategies, budget=budget, seed=args.seed)
    manifest = RunManifest(command="game", config={**vars(args), "budget": budget},
                           seed=args.seed)
    record = defender_select(g, config, temps, dataset=ds.name,
                             workers=args.workers)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "graph.edges", "w") as fh:
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")
    (out / "record.json").write_text(record.to_json() + "\n")
    write_curves_csv(out / "curves.csv", record)
    outputs = {"record": str(out / "record.json"),
               "curves": str(out / "curves.csv"),
               "graph": str(out / "graph.edges")}
    tradeoff_csv = None
    if args.attack_prob_grid:
        grid = [float(x) for x in args.attack_prob_grid.split(",")]
        write_tradeoff_csv(out / "tradeoff.csv", record, grid)
        tradeoff_csv = "tradeoff.csv"
        outputs["tradeoff"] = str(out / "tradeoff.csv")
    write_report_specs(out / "report_specs", record, "curves.csv", g.n,
                       tradeoff_csv)
    manifest.outputs = outputs
    manifest.finish()
    manifest.write(out)
    print(f"dataset {ds.name}: n={g.n} m={g.num_edges} ({ds.source})")
    print(f"targets: {record.targets}")
    for name in record.detector_names:
        mark = " <- chosen" if name == record.chosen_detector else ""
        print(f"  {name:8s} mean rank {record.detector_mean_rank[name]:8.2f} "
              f"+- {record.detector_stderr[name]:.2f}{mark}")
    return 0


def cmd_replay(args) -> int:
    run_dir = Path(args.run_dir)
    manifest_path = run_dir / "manifest.json" if run_dir.is_dir() else run_dir
    if not manifest_path.exists():
        raise DatasetError(f"no manifest at {manifest_path}")
    run_dir = manifest_path.parent
    record_path = run_dir / "record.json"
    edges_path = run_dir / "graph.edges"
    if not record_path.exists() or not edges_path.exists():
        raise DatasetError(f"run directory {run_dir} is missing record.json/graph.edges")
    record = GameRecord.from_json(record_path.read_text())
    with open(edges_path) as fh:
        g = load_edge_list_indexed(fh)
    mismatches = replay_record(g, record)
    checks = sum(len(c.outcomes) for c in record.cells) + len(record.cells)
    if mismatches:
        for m in mismatches:
            print(f"MISMATCH {m}")
        print(f"{len(mismatches)} of {checks} checks failed")
        return 4
    print(f"all {checks} checks passed")
    return 0


def cmd_convert(args) -> int:
    g = load_gml(Path(args.input).read_text())
    with open(args.output, "w") as fh:
        for u, v in g.edges():
            fh.write(f"{u} {v}\n")
    if args.labels_out:
        with open(args.labels_out, "w") as fh:
            fh.write("node,label\n")
            for v in range(g.n):
                fh.write(f"{v},{g.label_of(v)}\n")
    rep = g.load_report
    print(f"converted {args.input}: n={g.n} m={g.num_edges} "
          f"(dropped {rep.duplicates_dropped} duplicates, "
          f"{rep.self_loops_dropped} self-loops)")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"generate": cmd_generate, "game": cmd_game,
                "replay": cmd_replay, "convert-gml": cmd_convert}
    try:
        return handlers[args.command](args)
    except (DatasetError, GraphParseError, FileNotFoundError) as err:
        print(f"data error: {err}", file=sys.stderr)
        return 3
    except ValueError as err:
        print(f"usage error: {err}", file=sys.stderr)
        return 2
    except Exception as err:  # noqa: BLE001 - CLI boundary
        print(f"runtime error: {err}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
