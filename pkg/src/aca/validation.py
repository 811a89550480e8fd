"""Input validation helpers shared by metrics, detectors, and attacks."""

from __future__ import annotations

import numpy as np

from .cover import CommunityCover
from .graph import GraphLike


def check_node(g: GraphLike, v: int) -> int:
    v = int(v)
    if not 0 <= v < g.n:
        raise ValueError(f"node {v} outside 0..{g.n - 1}")
    return v


def check_temperatures(g: GraphLike, temps) -> np.ndarray:
    """Per-node temperature array with values in {-1, 0, +1}."""
    t = np.asarray(temps, dtype=np.int64)
    if t.shape != (g.n,):
        raise ValueError(f"temperature map has shape {t.shape}, expected ({g.n},)")
    if not np.isin(t, (-1, 0, 1)).all():
        raise ValueError("temperatures must be in {-1, 0, 1}")
    return t


def check_labels(g: GraphLike, labels, binary: bool = False) -> np.ndarray:
    """Per-node integer label array; optionally restricted to {0, 1}."""
    lab = np.asarray(labels, dtype=np.int64)
    if lab.shape != (g.n,):
        raise ValueError(f"label map has shape {lab.shape}, expected ({g.n},)")
    if binary and not np.isin(lab, (0, 1)).all():
        raise ValueError("labels must be in {0, 1}")
    return lab


def check_cover(g: GraphLike, cover: CommunityCover) -> CommunityCover:
    if cover.n != g.n:
        raise ValueError(f"cover is over {cover.n} nodes, graph has {g.n}")
    return cover
