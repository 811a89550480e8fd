"""Dataset bundle IO: graph.edges, labels.csv, attrs.bin, meta.json."""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

from ..graph import Graph, GraphLike

ATTR_MAGIC = b"ATTR"


def write_attribute_bits(path: Path, matrix: np.ndarray) -> None:
    """Pack a 0/1 matrix row-major into bits behind an ATTR/rows/cols header."""
    rows, cols = matrix.shape
    packed = np.packbits(matrix.astype(np.uint8).ravel())
    with open(path, "wb") as fh:
        fh.write(ATTR_MAGIC)
        fh.write(struct.pack("<II", rows, cols))
        fh.write(packed.tobytes())


def read_attribute_bits(path: Path) -> np.ndarray:
    with open(path, "rb") as fh:
        magic = fh.read(4)
        if magic != ATTR_MAGIC:
            raise ValueError(f"bad attribute file magic {magic!r}")
        rows, cols = struct.unpack("<II", fh.read(8))
        packed = np.frombuffer(fh.read(), dtype=np.uint8)
    bits = np.unpackbits(packed, count=rows * cols)
    return bits.reshape(rows, cols)


def write_bundle(out_dir: Path, graph: GraphLike, labels=None,
                 attributes: np.ndarray | None = None, meta: dict | None = None) -> dict:
    """Write a dataset bundle; returns the paths written."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    paths = {}
    edges_path = out_dir / "graph.edges"
    with open(edges_path, "w") as fh:
        for u, v in graph.edges():
            fh.write(f"{u} {v}\n")
    paths["graph"] = str(edges_path)
    if labels is not None:
        labels_path = out_dir / "labels.csv"
        with open(labels_path, "w") as fh:
            fh.write("node,label\n")
            for v, lab in enumerate(np.asarray(labels)):
                fh.write(f"{v},{int(lab)}\n")
        paths["labels"] = str(labels_path)
    if attributes is not None:
        attrs_path = out_dir / "attrs.bin"
        write_attribute_bits(attrs_path, attributes)
        paths["attributes"] = str(attrs_path)
    if meta is not None:
        meta_path = out_dir / "meta.json"
        with open(meta_path, "w") as fh:
            json.dump(meta, fh, indent=2, sort_keys=True)
            fh.write("\n")
        paths["meta"] = str(meta_path)
    return paths


def read_labels_csv(path: Path) -> np.ndarray:
    values: list[tuple[int, int]] = []
    with open(path) as fh:
        header = fh.readline()
        if not header.startswith("node,label"):
            raise ValueError(f"unexpected labels header {header!r}")
        for line in fh:
            node, lab = line.strip().split(",")
            values.append((int(node), int(lab)))
    values.sort()
    return np.array([lab for _, lab in values], dtype=np.int64)
