"""Independent reference implementations used to check the library.

Everything here is deliberately naive: explicit path enumeration, double
loops, quadratic scans. The only requirement is obvious correctness, not
speed. The betweenness oracle additionally mirrors the library's
accumulation order (ascending ordered pairs, one division per pair, one
final normalisation) so results can be compared bit for bit.
"""

from __future__ import annotations

import random
from collections import deque

import numpy as np

from semnet import AffinityMatrix, DocumentStream, Graph


# -- random inputs -------------------------------------------------------


def random_graph(rng: random.Random, max_nodes: int, edge_prob: float = 0.35,
                 max_weight: int = 9) -> Graph:
    """Connected-ish random digraph with small integer weights."""
    n = rng.randint(2, max_nodes)
    labels = [f"n{i:02d}" for i in range(n)]
    g = Graph()
    for lab in labels:
        g.add_node(lab)
    for s in labels:
        for t in labels:
            if s != t and rng.random() < edge_prob:
                g.add_edge(s, t, float(rng.randint(1, max_weight)))
    return g


def random_affinity(rng: random.Random, labels: list[str]) -> AffinityMatrix:
    """Row-plausible affinity matrix: values in [0, 1], zero diagonal."""
    n = len(labels)
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.5:
                values[i, j] = rng.uniform(0.05, 1.0)
    return AffinityMatrix(tuple(labels), values)


# -- betweenness by path enumeration -------------------------------------


def _hop_distances(adj: dict[int, list[int]], n: int, source: int) -> list[int]:
    dist = [-1] * n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def _all_shortest_paths(adj: dict[int, list[int]], dist: list[int],
                        source: int, target: int) -> list[list[int]]:
    """Every shortest path source->target, by DFS along the BFS layering."""
    paths: list[list[int]] = []
    stack: list[list[int]] = [[source]]
    while stack:
        path = stack.pop()
        v = path[-1]
        if v == target:
            paths.append(path)
            continue
        for w in adj[v]:
            if dist[w] == dist[v] + 1 and dist[w] <= dist[target]:
                stack.append(path + [w])
    return paths


def betweenness_oracle(g: Graph) -> dict[str, float]:
    """Fractional betweenness via explicit enumeration of shortest paths.

    Accumulates per ordered pair in ascending index order with a single
    division per pair, then divides once by (n-1)(n-2), matching the
    library's floating-point structure exactly.
    """
    labels = list(g.labels)
    n = len(labels)
    adj = {i: [g.index_of(t) for t, _ in g.successors(labels[i])] for i in range(n)}
    score = [0.0] * n
    for s in range(n):
        dist = _hop_distances(adj, n, s)
        for t in range(n):
            if s == t or dist[t] == -1:
                continue
            paths = _all_shortest_paths(adj, dist, s, t)
            total = float(len(paths))
            through: dict[int, float] = {}
            for path in paths:
                for v in path[1:-1]:
                    through[v] = through.get(v, 0.0) + 1.0
            for v in sorted(through):
                score[v] += through[v] / total
    if n > 2:
        norm = (n - 1) * (n - 2)
        score = [v / norm for v in score]
    return {labels[v]: score[v] for v in range(n)}


# -- extrinsic value by double loop ---------------------------------------


def extrinsic_oracle(f: AffinityMatrix, freq: dict[str, int]) -> dict[str, float]:
    """Literal double-loop version of the extrinsic value."""
    labels = list(f.labels)
    out: dict[str, float] = {}
    for x in labels:
        contributors = [i for i in labels if f.value(i, x) > 0.0]
        total = 0.0
        for i in contributors:
            gain = f.value(i, x) * freq.get(i, 0)
            for j in contributors:
                if j != i:
                    gain -= f.value(i, j) * freq.get(i, 0) * f.value(j, x)
            total += max(gain, 0.0)
        out[x] = total
    return out


# -- co-occurrence by quadratic scan --------------------------------------


def cooccurrence_oracle(doc: DocumentStream, window: int) -> dict[tuple[str, str], int]:
    """All ordered pairs within the window, counted the slow way."""
    weights: dict[tuple[str, str], int] = {}
    tokens = doc.tokens
    for a in tokens:
        for b in tokens:
            gap = b.position - a.position
            if 1 <= gap <= window and a.lemma != b.lemma:
                key = (a.lemma, b.lemma)
                weights[key] = weights.get(key, 0) + 1
    return weights
