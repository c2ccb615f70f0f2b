"""Weighted directed graph model, classical centralities, and network fusion.

Centralities here follow the unweighted convention: path lengths are hop
counts, and edge weights only decide whether an edge exists. Weights matter
to the affinity layer, not to betweenness/closeness/eigenvector.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .errors import ConvergenceError, ParseError
from .ioutil import write_text_atomic

_UNREACHED = -1


class DegreeCounts(NamedTuple):
    in_degree: int
    out_degree: int
    total: int


@dataclass(frozen=True)
class CentralityScores:
    """Per-node values for one centrality measure."""

    measure: str
    values: dict[str, float]

    def __getitem__(self, label: str) -> float:
        return self.values[label]


class Graph:
    """Directed graph with positive edge weights and unique string labels.

    Labels are the public identity of a node; each label is also assigned a
    stable integer index (insertion order) so matrices can be aligned with
    the graph. Storing an edge twice replaces its weight. Self-loops and
    non-positive weights are rejected.
    """

    __slots__ = ("_labels", "_index", "_succ", "_pred")

    def __init__(self) -> None:
        self._labels: list[str] = []
        self._index: dict[str, int] = {}
        self._succ: list[dict[int, float]] = []
        self._pred: list[dict[int, float]] = []

    # -- nodes ---------------------------------------------------------

    def add_node(self, label: str) -> int:
        """Add a node if absent; return its index either way."""
        if not isinstance(label, str) or not label:
            raise ValueError(f"node label must be a non-empty string, got {label!r}")
        idx = self._index.get(label)
        if idx is None:
            idx = len(self._labels)
            self._index[label] = idx
            self._labels.append(label)
            self._succ.append({})
            self._pred.append({})
        return idx

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self._labels)

    def index_of(self, label: str) -> int:
        return self._index[label]

    def label_of(self, index: int) -> str:
        return self._labels[index]

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def __len__(self) -> int:
        return len(self._labels)

    # -- edges ---------------------------------------------------------

    def add_edge(self, source: str, target: str, weight: float) -> None:
        """Set the weight of the edge source -> target, creating nodes as needed."""
        if source == target:
            raise ValueError(f"self-loop rejected: {source!r}")
        w = float(weight)
        if not math.isfinite(w) or w <= 0.0:
            raise ValueError(f"edge weight must be positive and finite, got {weight!r}")
        si = self.add_node(source)
        ti = self.add_node(target)
        self._succ[si][ti] = w
        self._pred[ti][si] = w

    def has_edge(self, source: str, target: str) -> bool:
        si = self._index.get(source)
        ti = self._index.get(target)
        return si is not None and ti is not None and ti in self._succ[si]

    def weight(self, source: str, target: str) -> float:
        """Edge weight, or 0.0 when the edge (or either node) is absent."""
        si = self._index.get(source)
        ti = self._index.get(target)
        if si is None or ti is None:
            return 0.0
        return self._succ[si].get(ti, 0.0)

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self._succ)

    def edges(self) -> Iterator[tuple[str, str, float]]:
        """Yield (source, target, weight) in index order."""
        for si, nbrs in enumerate(self._succ):
            s = self._labels[si]
            for ti in sorted(nbrs):
                yield s, self._labels[ti], nbrs[ti]

    def successors(self, label: str) -> Iterator[tuple[str, float]]:
        nbrs = self._succ[self._index[label]]
        for ti in sorted(nbrs):
            yield self._labels[ti], nbrs[ti]

    def predecessors(self, label: str) -> Iterator[tuple[str, float]]:
        nbrs = self._pred[self._index[label]]
        for si in sorted(nbrs):
            yield self._labels[si], nbrs[si]

    def degree(self, label: str) -> DegreeCounts:
        idx = self._index[label]
        i = len(self._pred[idx])
        o = len(self._succ[idx])
        return DegreeCounts(i, o, i + o)

    def adjacency_matrix(self) -> np.ndarray:
        """Dense weight matrix aligned with node indices; absent edges are 0."""
        n = len(self._labels)
        mat = np.zeros((n, n), dtype=np.float64)
        for si, nbrs in enumerate(self._succ):
            for ti, w in nbrs.items():
                mat[si, ti] = w
        return mat

    def copy(self) -> "Graph":
        dup = Graph()
        for label in self._labels:
            dup.add_node(label)
        for s, t, w in self.edges():
            dup.add_edge(s, t, w)
        return dup

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if set(self._labels) != set(other._labels):
            return False
        mine = {(self._labels[s], self._labels[t]): w
                for s, nbrs in enumerate(self._succ) for t, w in nbrs.items()}
        theirs = {(other._labels[s], other._labels[t]): w
                  for s, nbrs in enumerate(other._succ) for t, w in nbrs.items()}
        return mine == theirs

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self)}, edges={self.edge_count()})"


# -- shortest-path machinery ------------------------------------------


def _successor_lists(g: Graph) -> list[list[int]]:
    return [sorted(nbrs) for nbrs in g._succ]


def _hop_distances(succ: list[list[int]], source: int) -> tuple[list[int], list[float]]:
    """BFS hop distances plus shortest-path counts from one source.

    Counts are kept in float64. They are exact as long as they stay below
    2**53, which holds for every graph size this library targets.
    """
    n = len(succ)
    dist = [_UNREACHED] * n
    sigma = [0.0] * n
    dist[source] = 0
    sigma[source] = 1.0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        dv = dist[v]
        sv = sigma[v]
        for w in succ[v]:
            if dist[w] == _UNREACHED:
                dist[w] = dv + 1
                queue.append(w)
            if dist[w] == dv + 1:
                sigma[w] += sv
    return dist, sigma


def betweenness(g: Graph) -> CentralityScores:
    """Directed betweenness with fractional pair contributions.

    For each ordered pair (s, t), s != t, every intermediate node v earns
    the fraction of shortest s->t paths passing through it. Totals are
    divided by (n-1)(n-2); graphs with fewer than three nodes score zero
    everywhere.

    Accumulation order is fixed: pairs are visited in ascending (s, t)
    index order and each pair contributes exactly one division. Tests rely
    on this to compare against a path-enumeration oracle bit for bit.
    """
    n = len(g)
    if n == 0:
        raise ValueError("betweenness requires a non-empty graph")
    succ = _successor_lists(g)
    far = n + 1  # sentinel beyond any real hop distance
    dist = np.full((n, n), far, dtype=np.int64)
    sigma = np.zeros((n, n), dtype=np.float64)
    for s in range(n):
        d, counts = _hop_distances(succ, s)
        for v in range(n):
            if d[v] != _UNREACHED:
                dist[s, v] = d[v]
        sigma[s] = counts
    score = np.zeros(n, dtype=np.float64)
    for s in range(n):
        for t in range(n):
            if s == t or dist[s, t] >= far:
                continue
            on_path = dist[s] + dist[:, t] == dist[s, t]
            on_path[s] = False
            on_path[t] = False
            if on_path.any():
                score[on_path] += sigma[s, on_path] * sigma[on_path, t] / sigma[s, t]
    if n > 2:
        score /= (n - 1) * (n - 2)
    return CentralityScores(
        "betweenness", {g.label_of(v): float(score[v]) for v in range(n)}
    )


def closeness(g: Graph) -> CentralityScores:
    """Outgoing-hop closeness with the reachable-share correction.

    With r nodes reachable from x (excluding x) at total hop distance d,
    the score is (r / (n-1)) * (r / d). Nodes that reach nothing score 0.
    """
    n = len(g)
    if n == 0:
        raise ValueError("closeness requires a non-empty graph")
    succ = _successor_lists(g)
    values: dict[str, float] = {}
    for s in range(n):
        dist, _ = _hop_distances(succ, s)
        reached = [d for v, d in enumerate(dist) if v != s and d != _UNREACHED]
        r = len(reached)
        if r == 0 or n == 1:
            values[g.label_of(s)] = 0.0
        else:
            values[g.label_of(s)] = (r / (n - 1)) * (r / sum(reached))
    return CentralityScores("closeness", values)


def eigenvector(g: Graph, tol: float = 1e-10, max_iter: int = 1000) -> CentralityScores:
    """Eigenvector centrality of the symmetrised weight matrix.

    Direction is dropped by taking the elementwise max of the weight matrix
    and its transpose. Power iteration runs on that matrix plus the
    identity: the shift leaves eigenvectors untouched but separates the
    dominant eigenvalue on bipartite-like graphs, where the plain iteration
    oscillates forever. The result has unit Euclidean norm and non-negative
    entries. Raises ConvergenceError after max_iter sweeps without the
    max-norm update dropping below tol.
    """
    n = len(g)
    if n == 0:
        raise ValueError("eigenvector requires a non-empty graph")
    if g.edge_count() == 0:
        raise ValueError("eigenvector requires at least one edge")
    if tol <= 0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter at least 1")
    weights = g.adjacency_matrix()
    sym = np.maximum(weights, weights.T)
    vec = np.full(n, 1.0 / math.sqrt(n), dtype=np.float64)
    for _ in range(max_iter):
        nxt = sym @ vec + vec
        nxt /= np.linalg.norm(nxt)
        if float(np.max(np.abs(nxt - vec))) < tol:
            return CentralityScores(
                "eigenvector", {g.label_of(v): float(nxt[v]) for v in range(n)}
            )
        vec = nxt
    raise ConvergenceError(
        f"eigenvector power iteration did not converge in {max_iter} iterations"
    )


# -- fusion and reduction ----------------------------------------------


def fuse(graphs: Iterable[Graph], rule: str = "max") -> Graph:
    """Merge graphs into one: union of nodes, duplicate edges combined.

    ``rule`` is "max" (keep the heaviest duplicate) or "sum". Nodes and
    edges of the result are inserted in sorted label order, so fusion of
    the same inputs in any order yields identical graphs.
    """
    if rule not in ("max", "sum"):
        raise ValueError(f"unknown fusion rule: {rule!r}")
    graphs = list(graphs)
    if not graphs:
        raise ValueError("fuse requires at least one graph")
    labels: set[str] = set()
    combined: dict[tuple[str, str], float] = {}
    for g in graphs:
        labels.update(g.labels)
        for s, t, w in g.edges():
            key = (s, t)
            if key not in combined:
                combined[key] = w
            elif rule == "max":
                combined[key] = max(combined[key], w)
            else:
                combined[key] += w
    out = Graph()
    for label in sorted(labels):
        out.add_node(label)
    for (s, t) in sorted(combined):
        out.add_edge(s, t, combined[(s, t)])
    return out


def top_n_subgraph(g: Graph, freq: dict[str, int], n: int) -> Graph:
    """Induced subgraph on the n most frequent nodes.

    Ranking is by descending count with lexicographic tie-break; nodes
    missing from ``freq`` count as 0. Node insertion follows the ranking,
    so matrices over the subgraph list hubs first.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    ranked = sorted(g.labels, key=lambda lab: (-freq.get(lab, 0), lab))[:n]
    keep = set(ranked)
    sub = Graph()
    for label in ranked:
        sub.add_node(label)
    for s, t, w in g.edges():
        if s in keep and t in keep:
            sub.add_edge(s, t, w)
    return sub


# -- edge-list files ----------------------------------------------------


def write_edge_list(g: Graph, path: str) -> None:
    """Write tab-separated ``source target weight`` lines, sorted by labels.

    Weights are serialised with repr() so a round-trip restores the exact
    float. The format carries edges only: isolated nodes are not
    representable and do not survive a round trip. Labels containing tabs
    or newlines are rejected.
    """
    for label in g.labels:
        if "\t" in label or "\n" in label or "\r" in label:
            raise ValueError(f"label not serialisable to TSV: {label!r}")
    lines = [f"{s}\t{t}\t{w!r}\n" for s, t, w in sorted(g.edges())]
    write_text_atomic(path, "".join(lines))


def read_edge_list(path: str) -> Graph:
    """Parse an edge-list TSV written by write_edge_list.

    Blank lines and lines starting with ``#`` are ignored. Malformed rows
    raise ParseError naming the file and line.
    """
    g = Graph()
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.rstrip("\n").rstrip("\r")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(
                    path, lineno,
                    f"expected source<TAB>target<TAB>weight, got {len(parts)} fields",
                )
            source, target, raw_weight = parts
            try:
                weight = float(raw_weight)
            except ValueError:
                raise ParseError(path, lineno, f"bad weight: {raw_weight!r}") from None
            try:
                g.add_edge(source, target, weight)
            except ValueError as exc:
                raise ParseError(path, lineno, str(exc)) from None
    return g
