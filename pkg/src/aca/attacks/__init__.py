"""Attack strategy registry with a uniform construction signature."""

from __future__ import annotations

from ..graph import GraphLike
from .evolutionary import epa_attack
from .greedy import bih_attack, community_importance, modularity_attack
from .heuristics import cold_and_lonely, ss_nbr_attack, stable_structure_attack
from .plan import AttackPlan, PrefixEvaluation, evaluate_prefixes
from .spectral import candidate_scores, embedding_attack

DEFAULT_STRATEGIES = ("cl", "ss", "emb", "mod", "bih")
GATED_STRATEGIES = ("epa", "ss-nbr")


def build_plan(name: str, g: GraphLike, target: int, detector, temps,
               budget: int, seed: int, **params) -> AttackPlan:
    """Construct the named strategy's plan against one (detector, target)."""
    name = name.lower()
    if name == "cl":
        return cold_and_lonely(g, target, temps, budget)
    if name == "ss":
        return stable_structure_attack(g, target, temps, detector,
                                       params.get("trials", 8), budget, seed)
    if name == "ss-nbr":
        return ss_nbr_attack(g, target, temps, detector,
                             params.get("trials", 8), budget, seed)
    if name == "emb":
        return embedding_attack(g, target, budget,
                                dim=params.get("dim", 32), seed=seed)
    if name == "mod":
        return modularity_attack(g, target, detector, budget, temps=temps)
    if name == "bih":
        return bih_attack(g, target, detector, budget)
    if name == "epa":
        return epa_attack(g, target, detector, temps, budget,
                          pop=params.get("pop", 100), gens=params.get("gens", 10),
                          seed=seed, seeds_from=params.get("seeds_from"))
    raise ValueError(f"unknown attack {name!r}; valid: "
                     f"{sorted(DEFAULT_STRATEGIES + GATED_STRATEGIES)}")


__all__ = [
    "AttackPlan",
    "DEFAULT_STRATEGIES",
    "GATED_STRATEGIES",
    "PrefixEvaluation",
    "bih_attack",
    "build_plan",
    "candidate_scores",
    "cold_and_lonely",
    "community_importance",
    "embedding_attack",
    "epa_attack",
    "evaluate_prefixes",
    "modularity_attack",
    "ss_nbr_attack",
    "stable_structure_attack",
]
