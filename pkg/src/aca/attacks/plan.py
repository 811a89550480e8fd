"""Attack plans and prefix evaluation.

A plan is an ordered list of edges to add, all touching the target unless
the strategy is flagged as neighbor-linking. The attacker evaluates every
prefix size 0..len(plan): prefix 0 is the unattacked baseline, and the best
prefix is the smallest one attaining the maximum rank.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from ..graph import EdgeOverlay, GraphLike
from ..metrics import node_community_temperature, rank
from ..validation import check_temperatures


@dataclass
class AttackPlan:
    strategy: str
    target: int
    edges: list[tuple[int, int]]
    budget: int
    seed: int | None = None
    params: dict = field(default_factory=dict)
    neighbor_link: bool = False

    def __post_init__(self):
        self.edges = [tuple(sorted((int(u), int(v)))) for u, v in self.edges]

    def validate(self, g: GraphLike) -> None:
        if len(self.edges) > self.budget:
            raise ValueError(f"plan length {len(self.edges)} exceeds budget {self.budget}")
        seen: set[tuple[int, int]] = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) in plan")
            if g.has_edge(u, v):
                raise ValueError(f"edge ({u},{v}) already exists")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v}) in plan")
            seen.add((u, v))
            if not self.neighbor_link and self.target not in (u, v):
                raise ValueError(f"edge ({u},{v}) does not touch target {self.target}")

    def to_json(self) -> str:
        return json.dumps({
            "strategy": self.strategy,
            "target": self.target,
            "edges": [list(e) for e in self.edges],
            "budget": self.budget,
            "seed": self.seed,
            "params": self.params,
            "neighbor_link": self.neighbor_link,
        })

    @classmethod
    def from_json(cls, text: str) -> "AttackPlan":
        obj = json.loads(text)
        return cls(strategy=obj["strategy"], target=obj["target"],
                   edges=[tuple(e) for e in obj["edges"]], budget=obj["budget"],
                   seed=obj.get("seed"), params=obj.get("params", {}),
                   neighbor_link=obj.get("neighbor_link", False))


@dataclass
class PrefixEvaluation:
    ranks: list[int]
    temperatures: list[float]
    best_prefix: int

    @property
    def best_rank(self) -> int:
        return self.ranks[self.best_prefix]

    @property
    def baseline_rank(self) -> int:
        return self.ranks[0]


def evaluate_prefixes(g: GraphLike, plan: AttackPlan, detector, temps) -> PrefixEvaluation:
    """Run the detector on every plan prefix and track the target's rank."""
    t = check_temperatures(g, temps)
    plan.validate(g)
    ranks: list[int] = []
    temperatures: list[float] = []
    for s in range(len(plan.edges) + 1):
        view = g if s == 0 else EdgeOverlay(g, plan.edges[:s])
        try:
            cover = detector.detect(view)
        except Exception as err:
            raise RuntimeError(
                f"detector {getattr(detector, 'name', detector)!r} failed at "
                f"prefix {s} of {plan.strategy} plan") from err
        ranks.append(rank(plan.target, cover, t))
        temperatures.append(node_community_temperature(plan.target, cover, t))
    best = max(range(len(ranks)), key=lambda s: (ranks[s], -s))
    return PrefixEvaluation(ranks=ranks, temperatures=temperatures, best_prefix=best)
