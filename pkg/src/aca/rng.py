"""Deterministic random-stream derivation.

All randomness in the library flows from one 64-bit master seed. Components
draw from named substreams so that results do not depend on scheduling or on
how many other components consumed randomness first.
"""

from __future__ import annotations

import hashlib

import numpy as np

_MASK64 = (1 << 64) - 1


def substream_seed(master_seed: int, *labels) -> int:
    """Derive a 64-bit seed from a master seed and a label path.

    Labels may be strings or integers (e.g. ``("trial", 3)``). The derivation
    is a SHA-256 hash of the canonical label path, so it is stable across
    platforms and runs.
    """
    h = hashlib.sha256()
    h.update(str(int(master_seed) & _MASK64).encode())
    for label in labels:
        h.update(b"/")
        h.update(str(label).encode())
    return int.from_bytes(h.digest()[:8], "little")


def substream(master_seed: int, *labels) -> np.random.Generator:
    """A fresh numpy Generator seeded from the labeled substream."""
    return np.random.default_rng(substream_seed(master_seed, *labels))
