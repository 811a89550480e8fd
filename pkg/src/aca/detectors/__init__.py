from .base import CommunityDetector, StableStructureSet, stable_structures
from .bp import BPOverlapDetector
from .cliques import CliquePercolationDetector, maximal_cliques
from .linkclust import HLCDetector
from .louvain import LeidenDetector, LouvainDetector
from .umst import UMSTDetector, umst_edges

DETECTORS: dict[str, type[CommunityDetector]] = {
    "louvain": LouvainDetector,
    "leiden": LeidenDetector,
    "cp": CliquePercolationDetector,
    "hlc": HLCDetector,
    "umst": UMSTDetector,
    "bp": BPOverlapDetector,
}


def make_detector(kind: str, **params) -> CommunityDetector:
    """Instantiate a detector by registry name."""
    try:
        cls = DETECTORS[kind.lower()]
    except KeyError:
        raise ValueError(f"unknown detector {kind!r}; valid: {sorted(DETECTORS)}") from None
    return cls(**params)


__all__ = [
    "BPOverlapDetector",
    "CliquePercolationDetector",
    "CommunityDetector",
    "DETECTORS",
    "HLCDetector",
    "LeidenDetector",
    "LouvainDetector",
    "StableStructureSet",
    "UMSTDetector",
    "make_detector",
    "maximal_cliques",
    "stable_structures",
    "umst_edges",
]
