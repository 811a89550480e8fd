"""Run artifacts: curves CSV, tradeoff CSV, report specs, and replay."""

from __future__ import annotations

import json
from pathlib import Path

from ..attacks import evaluate_prefixes
from ..detectors import make_detector
from ..game import GameRecord, mixed_sweep
from ..graph import Graph

CURVES_SCHEMA = "aca-curves-v1"
TRADEOFF_SCHEMA = "aca-tradeoff-v1"


def _format_temp(x: float) -> str:
    return format(x, ".10g")


def write_curves_csv(path: Path, record: GameRecord) -> None:
    """Per-prefix curves, one row per (detector, attack, target, prefix)."""
    lines = [f"# schema: {CURVES_SCHEMA}",
             "dataset,detector,attack,target,prefix_size,rank,t_comm"]
    for name in record.detector_names:
        for strategy in record.strategies:
            for target in record.targets:
                cell = record.cell(name, target)
                outcome = cell.outcomes.get(strategy)
                if outcome is None:
                    continue
                for s, (r, t) in enumerate(zip(outcome.ranks, outcome.temperatures)):
                    lines.append(f"{record.dataset},{name},{strategy},{target},"
                                 f"{s},{r},{_format_temp(t)}")
    Path(path).write_text("\n".join(lines) + "\n")


def write_tradeoff_csv(path: Path, record: GameRecord, grid: list[float]) -> None:
    lines = [f"# schema: {TRADEOFF_SCHEMA}",
             "dataset,detector,p_attack,expected_rank,chosen"]
    for row in mixed_sweep(record, grid):
        for name in record.detector_names:
            chosen = 1 if row["chosen_detector"] == name else 0
            lines.append(f"{record.dataset},{name},{_format_temp(row['p_attack'])},"
                         f"{_format_temp(row['objective'][name])},{chosen}")
    Path(path).write_text("\n".join(lines) + "\n")


def write_report_specs(out_dir: Path, record: GameRecord, curves_csv: str,
                       n_nodes: int, tradeoff_csv: str | None = None) -> list[Path]:
    """Figure specs consumed by the reportgen tool.

    Input paths are stored relative to the spec file's own directory, which
    sits one level below the run directory holding the CSVs.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    curves_rel = f"../{curves_csv}"
    specs = [
        ("budget_sweep", {"kind": "budget_sweep", "inputs": [curves_rel],
                          "output": "budget_sweep.svg",
                          "options": {"dataset": record.dataset}}),
        ("rank_table", {"kind": "rank_table", "inputs": [curves_rel],
                        "output": "rank_table.html", "options": {}}),
        ("stackelberg_bars", {"kind": "stackelberg_bars", "inputs": [curves_rel],
                              "output": "stackelberg.svg",
                              "options": {"n_nodes": n_nodes}}),
    ]
    if tradeoff_csv:
        specs.append(("tradeoff_curves",
                      {"kind": "tradeoff_curves", "inputs": [f"../{tradeoff_csv}"],
                       "output": "tradeoff.svg", "options": {}}))
    paths = []
    for stem, payload in specs:
        p = out_dir / f"{stem}.spec.json"
        with open(p, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        paths.append(p)
    return paths


def replay_record(g: Graph, record: GameRecord) -> list[str]:
    """Re-execute every persisted plan and compare the recorded curves.

    Returns human-readable mismatch descriptions; empty means the record
    reproduces bit-exactly.
    """
    import numpy as np

    mismatches: list[str] = []
    detectors = {name: make_detector(name, **record.detector_params[name])
                 for name in record.detector_names}
    for cell in record.cells:
        detector = detectors[cell.detector]
        temps = np.array(record.temperatures[cell.target], dtype=np.int64)
        for strategy, outcome in cell.outcomes.items():
            ev = evaluate_prefixes(g, outcome.plan, detector, temps)
            where = f"{cell.detector}/{strategy}/target={cell.target}"
            if ev.ranks != outcome.ranks:
                mismatches.append(f"{where}: ranks differ ({ev.ranks} != {outcome.ranks})")
            if ev.temperatures != outcome.temperatures:
                mismatches.append(f"{where}: temperatures differ")
            if ev.best_prefix != outcome.best_prefix:
                mismatches.append(f"{where}: best prefix {ev.best_prefix} != {outcome.best_prefix}")
        recomputed_max = max(o.best_rank for o in cell.outcomes.values())
        if recomputed_max != cell.max_rank:
            mismatches.append(f"{cell.detector}/target={cell.target}: max rank drifted")
    return mismatches
