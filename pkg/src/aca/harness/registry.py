"""Dataset registry: names to local files, converters, and labels.

Real datasets are looked up under the data root (``--data-dir`` flag or the
``ACA_DATA_DIR`` environment variable, default ``./data``); nothing is ever
fetched at runtime — ``scripts/fetch_datasets.py`` documents the sources.
Two synthetic fixtures ship inside the package so the pipeline runs out of
the box: ``football-like`` (planted 12-conference surrogate at the football
dataset's scale) and ``mini`` (a small smoke-test graph).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from ..graph import Graph, largest_connected_component, load_edge_list, load_gml


class DatasetError(RuntimeError):
    pass


@dataclass
class LoadedDataset:
    name: str
    graph: Graph
    labels: np.ndarray | None
    source: str


DATASETS = {
    "football": {"files": ["football.gml"], "format": "gml", "labels": "gml"},
    "netsci": {"files": ["netscience.gml"], "format": "gml", "labels": None},
    "grid": {"files": ["power.gml"], "format": "gml", "labels": None},
    "email": {"files": ["email-Eu-core.txt"], "format": "edgelist",
              "labels": "email-Eu-core-department-labels.txt"},
    "asg": {"files": ["asg.edges", "asg.txt"], "format": "edgelist", "labels": None},
    "cora": {"files": ["cora.npz"], "format": "npz", "labels": "npz"},
    "citeseer": {"files": ["citeseer.npz"], "format": "npz", "labels": "npz"},
    "football-like": {"fixture": "football_like"},
    "mini": {"fixture": "mini"},
}


def data_dir(override: str | None = None) -> Path:
    if override:
        return Path(override)
    return Path(os.environ.get("ACA_DATA_DIR", "data"))


def _labels_from_graph(g: Graph) -> np.ndarray | None:
    if g.node_labels is None:
        return None
    values = g.node_labels
    uniq = {v: i for i, v in enumerate(dict.fromkeys(values))}
    return np.array([uniq[v] for v in values], dtype=np.int64)


def _load_fixture(name: str, stem: str) -> LoadedDataset:
    pkg = resources.files("aca") / "fixtures"
    edges_text = (pkg / f"{stem}.edges").read_text()
    g = load_edge_list(edges_text.splitlines())
    labels_file = pkg / f"{stem}.labels"
    labels = None
    try:
        lines = labels_file.read_text().splitlines()
    except FileNotFoundError:
        lines = []
    if lines:
        by_token = {}
        for line in lines:
            tok, lab = line.split()
            by_token[tok] = int(lab)
        labels = np.array([by_token[str(g.label_of(v))] for v in range(g.n)],
                          dtype=np.int64)
    return LoadedDataset(name=name, graph=g, labels=labels,
                         source=f"package fixture {stem}")


def _load_npz(path: Path) -> tuple[Graph, np.ndarray | None]:
    import scipy.sparse as sp

    with np.load(path, allow_pickle=False) as data:
        keys = set(data.keys())
        if {"adj_data", "adj_indices", "adj_indptr", "adj_shape"} <= keys:
            adj = sp.csr_matrix((data["adj_data"], data["adj_indices"],
                                 data["adj_indptr"]), shape=tuple(data["adj_shape"]))
        else:
            raise DatasetError(f"{path}: unrecognized npz layout {sorted(keys)}")
        labels = data["labels"].astype(np.int64) if "labels" in keys else None
    adj = adj.maximum(adj.T).tocoo()
    edges = {(int(u), int(v)) for u, v in zip(adj.row, adj.col) if u < v}
    return Graph(adj.shape[0], edges), labels


def resolve_dataset(name: str, root: str | None = None,
                    lcc: bool = True) -> LoadedDataset:
    """Load a registered dataset (largest connected component by default)."""
    name = name.lower()
    if name not in DATASETS:
        raise DatasetError(f"unknown dataset {name!r}; valid: {sorted(DATASETS)}")
    entry = DATASETS[name]
    if "fixture" in entry:
        return _load_fixture(name, entry["fixture"])
    base = data_dir(root)
    path = next((base / f for f in entry["files"] if (base / f).exists()), None)
    if path is None:
        raise DatasetError(
            f"dataset {name!r} not found under {base} (expected one of "
            f"{entry['files']}); see scripts/fetch_datasets.py")
    labels: np.ndarray | None = None
    if entry["format"] == "gml":
        g = load_gml(path.read_text())
        if entry["labels"] == "gml":
            labels = _labels_from_graph(g)
    elif entry["format"] == "edgelist":
        with open(path) as fh:
            g = load_edge_list(fh)
        if entry["labels"]:
            label_path = base / entry["labels"]
            if label_path.exists():
                by_token: dict[str, int] = {}
                for line in label_path.read_text().splitlines():
                    if line.strip():
                        tok, lab = line.split()
                        by_token[tok] = int(lab)
                labels = np.array([by_token.get(str(g.label_of(v)), -1)
                                   for v in range(g.n)], dtype=np.int64)
    elif entry["format"] == "npz":
        g, labels = _load_npz(path)
    else:  # pragma: no cover - registry is static
        raise DatasetError(f"bad registry format {entry['format']}")
    if lcc:
        from ..graph import connected_components

        comps = connected_components(g)
        best = max(comps, key=lambda m: (len(m), -m[0]))
        if len(best) != g.n:
            if labels is not None:
                labels = labels[np.array(best)]
            g = largest_connected_component(g)
    return LoadedDataset(name=name, graph=g, labels=labels, source=str(path))
