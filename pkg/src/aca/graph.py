"""Undirected simple graphs with cheap edge-addition overlays.

The base :class:`Graph` is immutable after construction and uses dense
integer node ids. Attack search never mutates a graph; it wraps the base in
an :class:`EdgeOverlay`, which answers neighborhood queries as if the added
edges were present.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np
import scipy.sparse as sp


class GraphParseError(ValueError):
    """Raised for malformed edge-list or GML input."""


@dataclass
class LoadReport:
    """Bookkeeping from a load: what was dropped or symmetrized."""

    lines: int = 0
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0
    directed_pairs_merged: int = 0


class Graph:
    """Immutable undirected simple graph on dense node ids 0..N-1."""

    __slots__ = ("n", "_adj", "_edge_set", "node_labels", "load_report")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 node_labels: Sequence | None = None,
                 load_report: LoadReport | None = None):
        self.n = int(n)
        adj: list[list[int]] = [[] for _ in range(self.n)]
        edge_set: set[tuple[int, int]] = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) outside 0..{self.n - 1}")
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                raise ValueError(f"duplicate edge {key}")
            edge_set.add(key)
            adj[u].append(v)
            adj[v].append(u)
        self._adj: list[tuple[int, ...]] = [tuple(sorted(a)) for a in adj]
        self._edge_set = frozenset(edge_set)
        self.node_labels = list(node_labels) if node_labels is not None else None
        self.load_report = load_report

    # -- basic queries ----------------------------------------------------
    @property
    def num_edges(self) -> int:
        return len(self._edge_set)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self._edge_set)

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return self._edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self._adj], dtype=np.int64)

    def adjacency_matrix(self) -> sp.csr_matrix:
        """Sparse symmetric 0/1 adjacency."""
        if not self._edge_set:
            return sp.csr_matrix((self.n, self.n))
        rows, cols = [], []
        for u, v in self._edge_set:
            rows += [u, v]
            cols += [v, u]
        data = np.ones(len(rows), dtype=np.float64)
        return sp.csr_matrix((data, (rows, cols)), shape=(self.n, self.n))

    def label_of(self, v: int):
        return self.node_labels[v] if self.node_labels is not None else v

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


class EdgeOverlay:
    """A graph view (V, E ∪ E') over an immutable base.

    The added set is fixed at construction and must be disjoint from the
    base edges; queries behave exactly as if the edges were present.
    """

    __slots__ = ("base", "added", "_merged_adj")

    def __init__(self, base: Graph, added: Iterable[tuple[int, int]]):
        self.base = base
        added_set: set[tuple[int, int]] = set()
        added_adj: dict[int, list[int]] = {}
        for u, v in added:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop on node {u}")
            key = (u, v) if u < v else (v, u)
            if base.has_edge(*key):
                raise ValueError(f"overlay edge {key} already in base graph")
            if key in added_set:
                raise ValueError(f"duplicate overlay edge {key}")
            added_set.add(key)
            added_adj.setdefault(u, []).append(v)
            added_adj.setdefault(v, []).append(u)
        self.added = frozenset(added_set)
        # merged adjacency fixed at construction: overlays are immutable
        self._merged_adj = {v: tuple(sorted(self.base.neighbors(v) + tuple(a)))
                            for v, a in added_adj.items()}

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def num_edges(self) -> int:
        return self.base.num_edges + len(self.added)

    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.base.edge_set() | self.added)

    def neighbors(self, v: int) -> tuple[int, ...]:
        merged = self._merged_adj.get(v)
        return merged if merged is not None else self.base.neighbors(v)

    def degree(self, v: int) -> int:
        merged = self._merged_adj.get(v)
        return len(merged) if merged is not None else self.base.degree(v)

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self.added or self.base.has_edge(u, v)

    def degrees(self) -> np.ndarray:
        d = self.base.degrees().copy()
        for v, merged in self._merged_adj.items():
            d[v] = len(merged)
        return d

    def adjacency_matrix(self) -> sp.csr_matrix:
        a = self.base.adjacency_matrix().tolil(copy=True)
        for u, v in self.added:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a.tocsr()

    def label_of(self, v: int):
        return self.base.label_of(v)

    def __repr__(self) -> str:
        return f"EdgeOverlay(base={self.base!r}, added={len(self.added)})"


GraphLike = Graph | EdgeOverlay


def load_edge_list(stream: IO[str] | Iterable[str]) -> Graph:
    """Parse a whitespace-separated edge list into a Graph.

    Node tokens may be arbitrary strings; they are re-indexed densely in
    first-appearance order and the original labels kept on the graph.
    Lines starting with ``#`` are ignored. Duplicate edges and self-loops
    are dropped and counted in the load report; a line whose reverse was
    already seen counts as a merged directed pair.
    """
    report = LoadReport()
    label_to_id: dict[str, int] = {}
    labels: list[str] = []
    edges: set[tuple[int, int]] = set()
    seen_ordered: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        report.lines += 1
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two node tokens, got {len(parts)}")
        ids = []
        for tok in parts:
            if tok not in label_to_id:
                label_to_id[tok] = len(labels)
                labels.append(tok)
            ids.append(label_to_id[tok])
        u, v = ids
        if u == v:
            report.self_loops_dropped += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            if (v, u) in seen_ordered and (u, v) not in seen_ordered:
                report.directed_pairs_merged += 1
            else:
                report.duplicates_dropped += 1
        else:
            edges.add(key)
        seen_ordered.add((u, v))
    if report.lines == 0:
        raise GraphParseError("empty edge list")
    return Graph(len(labels), edges, node_labels=labels, load_report=report)


def load_edge_list_indexed(stream: IO[str] | Iterable[str],
                           n: int | None = None) -> Graph:
    """Parse an edge list whose tokens already are dense integer ids.

    Unlike :func:`load_edge_list` this keeps ids verbatim, so a graph
    written edge-by-edge round-trips exactly (required by run replay).
    """
    edges: set[tuple[int, int]] = set()
    max_id = -1
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected two node tokens")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer node id") from None
        if u == v:
            continue
        max_id = max(max_id, u, v)
        edges.add((u, v) if u < v else (v, u))
    if max_id < 0:
        raise GraphParseError("empty edge list")
    return Graph(n if n is not None else max_id + 1, edges)


def _tokenize_gml(text: str) -> list[str]:
    tokens: list[str] = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c.isspace():
            i += 1
        elif c == '"':
            j = text.index('"', i + 1)
            tokens.append(text[i:j + 1])
            i = j + 1
        elif c in "[]":
            tokens.append(c)
            i += 1
        else:
            j = i
            while j < n and not text[j].isspace() and text[j] not in "[]":
                j += 1
            tokens.append(text[i:j])
            i = j
    return tokens


def load_gml(stream: IO[str] | str) -> Graph:
    """Import the node/edge block subset of GML used by public datasets.

    Reads ``node [ id .. label .. value .. ]`` and ``edge [ source .. target .. ]``
    blocks; a node's ``value`` (or, failing that, ``label``) is kept as its
    label for reporting and ground-truth classes. Duplicate edges and
    self-loops are dropped with counts, as in :func:`load_edge_list`.
    """
    text = stream if isinstance(stream, str) else stream.read()
    tokens = _tokenize_gml(text)
    report = LoadReport()
    node_order: list[int] = []
    node_values: dict[int, object] = {}
    raw_edges: list[tuple[int, int]] = []

    def parse_scalar(tok: str):
        if tok.startswith('"'):
            return tok[1:-1]
        try:
            return int(tok)
        except ValueError:
            try:
                return float(tok)
            except ValueError:
                return tok

    i = 0
    while i < len(tokens):
        tok = tokens[i]
        if tok in ("node", "edge") and i + 1 < len(tokens) and tokens[i + 1] == "[":
            depth, j = 1, i + 2
            fields: dict[str, object] = {}
            while j < len(tokens) and depth:
                if tokens[j] == "[":
                    depth += 1
                elif tokens[j] == "]":
                    depth -= 1
                elif depth == 1 and j + 1 < len(tokens) and tokens[j + 1] not in "[]":
                    fields[tokens[j]] = parse_scalar(tokens[j + 1])
                    j += 1
                j += 1
            if tok == "node":
                if "id" not in fields:
                    raise GraphParseError("GML node block without id")
                nid = int(fields["id"])  # type: ignore[arg-type]
                node_order.append(nid)
                if "value" in fields:
                    node_values[nid] = fields["value"]
                elif "label" in fields:
                    node_values[nid] = fields["label"]
            else:
                if "source" not in fields or "target" not in fields:
                    raise GraphParseError("GML edge block without source/target")
                raw_edges.append((int(fields["source"]), int(fields["target"])))  # type: ignore[arg-type]
            i = j
        else:
            i += 1
    if not node_order:
        raise GraphParseError("no node blocks in GML input")
    id_map = {nid: k for k, nid in enumerate(node_order)}
    edges: set[tuple[int, int]] = set()
    for s, t in raw_edges:
        report.lines += 1
        if s not in id_map or t not in id_map:
            raise GraphParseError(f"GML edge ({s},{t}) references unknown node")
        u, v = id_map[s], id_map[t]
        if u == v:
            report.self_loops_dropped += 1
            continue
        key = (u, v) if u < v else (v, u)
        if key in edges:
            report.duplicates_dropped += 1
        else:
            edges.add(key)
    labels = [node_values.get(nid, nid) for nid in node_order]
    return Graph(len(node_order), edges, node_labels=labels, load_report=report)


def connected_components(g: GraphLike) -> list[list[int]]:
    """Components as sorted id lists, via union-find."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(m) for m in groups.values()), key=lambda m: m[0])


def largest_connected_component(g: Graph) -> Graph:
    """Induced subgraph on the largest component, re-indexed.

    Ties between equally large components go to the one containing the
    smallest original node id. Members keep their relative id order, and
    node labels are carried through.
    """
    if g.n == 0:
        raise ValueError("empty graph has no components")
    comps = connected_components(g)
    best = max(comps, key=lambda m: (len(m), -m[0]))
    id_map = {old: new for new, old in enumerate(best)}
    member = set(best)
    edges = [(id_map[u], id_map[v]) for u, v in g.edges() if u in member and v in member]
    labels = [g.label_of(old) for old in best] if g.node_labels is not None else None
    return Graph(len(best), edges, node_labels=labels)


def jaccard_neighborhood(g: GraphLike, i: int, j: int) -> float:
    """Jaccard coefficient of the inclusive neighborhoods N(i), N(j).

    N(v) contains v itself, so adjacent nodes in a triangle score 1.0.
    """
    ni = set(g.neighbors(i))
    ni.add(i)
    nj = set(g.neighbors(j))
    nj.add(j)
    return len(ni & nj) / len(ni | nj)
