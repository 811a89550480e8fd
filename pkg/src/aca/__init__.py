"""Adversarial community analysis.

Plays a leader-follower game between an analyst choosing a community
detection method and a single evading node adding edges, and measures the
outcome by the target's triage rank and community temperature.
"""

__version__ = "0.1.0"

from .cover import CommunityCover, ensure_cover
from .graph import (
    EdgeOverlay,
    Graph,
    jaccard_neighborhood,
    largest_connected_component,
    load_edge_list,
    load_gml,
)
from .metrics import (
    community_temperature,
    delta_homophily,
    heterophilicity,
    modularity,
    node_community_temperature,
    rank,
)

__all__ = [
    "CommunityCover",
    "EdgeOverlay",
    "Graph",
    "__version__",
    "community_temperature",
    "delta_homophily",
    "ensure_cover",
    "heterophilicity",
    "jaccard_neighborhood",
    "largest_connected_component",
    "load_edge_list",
    "load_gml",
    "modularity",
    "node_community_temperature",
    "rank",
]
