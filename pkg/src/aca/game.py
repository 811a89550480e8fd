"""Leader-follower orchestration between detectors and attack strategies.

The analyst (leader) fixes a community detection method; the attacker
(follower) tries every enabled strategy at every budget prefix and keeps
the one maximizing the target's rank. The analyst then prefers the
detector minimizing the mean best-attack rank over candidate targets,
optionally mixed with the unattacked baseline when the attack probability
is below one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .attacks import DEFAULT_STRATEGIES, AttackPlan, build_plan, evaluate_prefixes
from .detectors import CommunityDetector, make_detector, stable_structures
from .detectors.louvain import LouvainDetector
from .graph import GraphLike
from .rng import substream, substream_seed
from .validation import check_labels, check_node


@dataclass
class GameConfig:
    detectors: list[CommunityDetector]
    targets: list[int]
    strategies: list[str] = field(default_factory=lambda: list(DEFAULT_STRATEGIES))
    budget: int = 50
    attack_probability: float | None = None
    seed: int = 0
    attack_params: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.detectors:
            raise ValueError("need at least one detector")
        if not self.strategies:
            raise ValueError("need at least one attack strategy")
        if not self.targets:
            raise ValueError("need at least one target")
        if self.attack_probability is not None and not 0 <= self.attack_probability <= 1:
            raise ValueError("attack probability must be in [0, 1]")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")


@dataclass
class StrategyOutcome:
    plan: AttackPlan
    ranks: list[int]
    temperatures: list[float]
    best_prefix: int

    @property
    def best_rank(self) -> int:
        return self.ranks[self.best_prefix]


@dataclass
class GameCell:
    """One (detector, target) entry: every strategy's prefix evaluation."""

    detector: str
    target: int
    outcomes: dict[str, StrategyOutcome]
    errors: dict[str, str]
    chosen_strategy: str
    max_rank: int
    baseline_rank: int


@dataclass
class GameRecord:
    dataset: str
    budget: int
    seed: int
    detector_names: list[str]
    detector_params: dict[str, dict]
    strategies: list[str]
    targets: list[int]
    temperatures: dict[int, list[int]]
    cells: list[GameCell]
    detector_mean_rank: dict[str, float]
    detector_stderr: dict[str, float]
    chosen_detector: str

    def cell(self, detector: str, target: int) -> GameCell:
        for c in self.cells:
            if c.detector == detector and c.target == target:
                return c
        raise KeyError((detector, target))

    def to_json(self) -> str:
        return json.dumps({
            "dataset": self.dataset,
            "budget": self.budget,
            "seed": self.seed,
            "detector_names": self.detector_names,
            "detector_params": self.detector_params,
            "strategies": self.strategies,
            "targets": self.targets,
            "temperatures": {str(t): v for t, v in self.temperatures.items()},
            "cells": [{
                "detector": c.detector,
                "target": c.target,
                "chosen_strategy": c.chosen_strategy,
                "max_rank": c.max_rank,
                "baseline_rank": c.baseline_rank,
                "errors": c.errors,
                "outcomes": {
                    name: {
                        "plan": json.loads(o.plan.to_json()),
                        "ranks": o.ranks,
                        "temperatures": o.temperatures,
                        "best_prefix": o.best_prefix,
                    } for name, o in c.outcomes.items()},
            } for c in self.cells],
            "detector_mean_rank": self.detector_mean_rank,
            "detector_stderr": self.detector_stderr,
            "chosen_detector": self.chosen_detector,
        }, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "GameRecord":
        obj = json.loads(text)
        cells = []
        for c in obj["cells"]:
            outcomes = {
                name: StrategyOutcome(
                    plan=AttackPlan.from_json(json.dumps(o["plan"])),
                    ranks=o["ranks"], temperatures=o["temperatures"],
                    best_prefix=o["best_prefix"])
                for name, o in c["outcomes"].items()}
            cells.append(GameCell(
                detector=c["detector"], target=c["target"], outcomes=outcomes,
                errors=c.get("errors", {}), chosen_strategy=c["chosen_strategy"],
                max_rank=c["max_rank"], baseline_rank=c["baseline_rank"]))
        return cls(
            dataset=obj["dataset"], budget=obj["budget"], seed=obj["seed"],
            detector_names=obj["detector_names"],
            detector_params=obj["detector_params"], strategies=obj["strategies"],
            targets=obj["targets"],
            temperatures={int(t): v for t, v in obj["temperatures"].items()},
            cells=cells, detector_mean_rank=obj["detector_mean_rank"],
            detector_stderr=obj["detector_stderr"],
            chosen_detector=obj["chosen_detector"])


def best_attack(g: GraphLike, target: int, detector: CommunityDetector,
                temps, config: GameConfig) -> GameCell:
    """Evaluate every enabled strategy and keep the rank-maximizing one.

    Strategy failures are recorded and skipped; ties go to the earlier
    strategy in the configured order (each evaluation already prefers the
    smallest prefix).
    """
    outcomes: dict[str, StrategyOutcome] = {}
    errors: dict[str, str] = {}
    for strategy in config.strategies:
        seed = substream_seed(config.seed, "attack", detector.name, target, strategy)
        try:
            plan = build_plan(strategy, g, target, detector, temps,
                              config.budget, seed, **config.attack_params)
            ev = evaluate_prefixes(g, plan, detector, temps)
        except Exception as err:  # noqa: BLE001 - contract: record and continue
            errors[strategy] = str(err)
            continue
        outcomes[strategy] = StrategyOutcome(
            plan=plan, ranks=ev.ranks, temperatures=ev.temperatures,
            best_prefix=ev.best_prefix)
    if not outcomes:
        raise RuntimeError(f"every strategy failed for target {target}: {errors}")
    chosen = max(outcomes, key=lambda s: outcomes[s].best_rank)
    # max() keeps the first maximum in dict order == config order
    return GameCell(detector=detector.name, target=target, outcomes=outcomes,
                    errors=errors, chosen_strategy=chosen,
                    max_rank=outcomes[chosen].best_rank,
                    baseline_rank=next(iter(outcomes.values())).ranks[0])


def _run_cell(job) -> GameCell:
    g, target, detector, temps, config = job
    return best_attack(g, target, detector, temps, config)


def defender_select(g: GraphLike, config: GameConfig,
                    temperatures: dict[int, np.ndarray],
                    dataset: str = "", workers: int = 1) -> GameRecord:
    """Play the full grid and pick the detector minimizing mean best rank.

    The (detector, target) grid is an independent job set; with workers > 1
    it runs on a process pool, and aggregation order is fixed by the job
    list, not by completion time.
    """
    jobs = [(g, target, detector, temperatures[target], config)
            for detector in config.detectors for target in config.targets]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_run_cell, jobs, chunksize=1))
    else:
        cells = [_run_cell(job) for job in jobs]
    means: dict[str, float] = {}
    stderrs: dict[str, float] = {}
    for detector in config.detectors:
        arr = np.asarray([c.max_rank for c in cells if c.detector == detector.name],
                         dtype=float)
        means[detector.name] = float(arr.mean())
        stderrs[detector.name] = float(arr.std(ddof=1) / np.sqrt(len(arr))) if len(arr) > 1 else 0.0
    chosen = min(means, key=lambda name: means[name])
    return GameRecord(
        dataset=dataset, budget=config.budget, seed=config.seed,
        detector_names=[d.name for d in config.detectors],
        detector_params={d.name: _jsonable(d.get_params()) for d in config.detectors},
        strategies=list(config.strategies), targets=list(config.targets),
        temperatures={t: np.asarray(v).astype(int).tolist()
                      for t, v in temperatures.items()},
        cells=cells, detector_mean_rank=means, detector_stderr=stderrs,
        chosen_detector=chosen)


def _jsonable(params: dict) -> dict:
    return {k: v for k, v in params.items() if isinstance(v, (int, float, str, bool, type(None)))}


def mixed_objective(record: GameRecord, p_attack: float) -> dict[str, float]:
    """Per-detector expected rank when the attack happens with probability p.

    Computed as p * mean(attacked) + (1-p) * mean(baseline): equal to the
    mean per-target mixture, and bit-exactly a convex combination of the
    p=1 and p=0 objectives.
    """
    out: dict[str, float] = {}
    for name in record.detector_names:
        attacked = np.array([record.cell(name, t).max_rank for t in record.targets], float)
        baseline = np.array([record.cell(name, t).baseline_rank for t in record.targets], float)
        out[name] = p_attack * float(attacked.mean()) + (1.0 - p_attack) * float(baseline.mean())
    return out


def mixed_defender_select(record: GameRecord, p_attack: float) -> tuple[str, dict[str, float]]:
    """Detector choice under attack probability p (from a played record)."""
    objective = mixed_objective(record, p_attack)
    chosen = min(objective, key=lambda name: objective[name])
    return chosen, objective


def mixed_sweep(record: GameRecord, grid: list[float]) -> list[dict]:
    """Objective table over an attack-probability grid."""
    rows = []
    for p in grid:
        chosen, objective = mixed_defender_select(record, p)
        rows.append({"p_attack": p, "chosen_detector": chosen,
                     "objective": objective})
    return rows


def select_targets_with_labels(g: GraphLike, labels, count: int,
                               seed: int) -> tuple[list[int], np.ndarray]:
    """Targets drawn from homogeneous stable structures, plus effective labels.

    Stable structures come from 20 Louvain trials. With ground-truth labels
    only label-homogeneous structures qualify; without, every structure
    qualifies and membership itself is the label (index in the structure
    list; nodes outside any kept structure get label -1).
    """
    if count < 1:
        raise ValueError("need at least one target")
    louvain = LouvainDetector(seed=substream_seed(seed, "target-louvain"))
    result = stable_structures(g, louvain, trials=20,
                               seed=substream_seed(seed, "target-trials"))
    lab = check_labels(g, labels) if labels is not None else None
    kept: list[frozenset[int]] = []
    for s in result.structures:
        if lab is None or len({int(lab[v]) for v in s}) == 1:
            kept.append(s)
    if not kept:
        raise RuntimeError("no qualifying stable structure to draw targets from")
    pool = sorted(set().union(*kept))
    if len(pool) < count:
        raise RuntimeError(f"only {len(pool)} candidate nodes for {count} targets")
    rng = substream(seed, "target-sample")
    picks = rng.choice(len(pool), size=count, replace=False)
    targets = sorted(pool[i] for i in picks.tolist())
    if lab is not None:
        effective = lab
    else:
        effective = np.full(g.n, -1, dtype=np.int64)
        for idx, s in enumerate(kept):
            for v in s:
                effective[v] = idx
    return targets, effective


def select_targets(g: GraphLike, labels, count: int, seed: int) -> list[int]:
    return select_targets_with_labels(g, labels, count, seed)[0]


def assign_temperatures(g: GraphLike, target: int, labels, seed: int,
                        force_hot_target: bool = False) -> np.ndarray:
    """Draw per-node temperatures around the target's label.

    Nodes sharing the target's label: hot 0.3 / cold 0.1 / unknown 0.6.
    All other nodes: the hot and cold probabilities are reversed. The
    target draws like any same-label node unless force_hot_target is set.
    """
    check_node(g, target)
    lab = check_labels(g, labels)
    rng = substream(seed, "temps", target)
    u = rng.random(g.n)
    same = lab == lab[target]
    temps = np.zeros(g.n, dtype=np.int64)
    temps[same & (u < 0.3)] = 1
    temps[same & (u >= 0.3) & (u < 0.4)] = -1
    temps[~same & (u < 0.1)] = 1
    temps[~same & (u >= 0.1) & (u < 0.4)] = -1
    if force_hot_target:
        temps[target] = 1
    return temps


def make_config_detectors(names: list[str], seed: int,
                          detector_params: dict[str, dict] | None = None) -> list[CommunityDetector]:
    """Instantiate detectors with per-detector seeds derived from a master."""
    out = []
    params = detector_params or {}
    for name in names:
        kwargs = dict(params.get(name, {}))
        kwargs.setdefault("seed", substream_seed(seed, "detector", name))
        out.append(make_detector(name, **kwargs))
    return out
