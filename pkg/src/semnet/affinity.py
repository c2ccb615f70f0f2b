"""Pairwise affinities over a weighted directed graph.

Every function here returns an AffinityMatrix aligned with the graph's
node order: entry (x, y) says how strongly x leans towards y, in [0, 1].
The diagonal is always zero and rows of nodes with no outgoing weight are
all zero. Convention for the ill-defined corners: 0/0 is read as 1 where a
formula divides comparable magnitudes (the Machiavelli case), and as an
empty row where it divides by total outgoing weight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import AlignmentError
from .graphs import Graph
from .ioutil import write_text_atomic

TNORMS = ("minimum", "product", "lukasiewicz")


@dataclass(frozen=True, eq=False)
class AffinityMatrix:
    """Square affinity values plus the node labels they are indexed by."""

    labels: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        n = len(self.labels)
        if self.values.shape != (n, n):
            raise ValueError(
                f"matrix shape {self.values.shape} does not match {n} labels"
            )
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})

    def index_of(self, label: str) -> int:
        return self._index[label]  # type: ignore[attr-defined]

    def value(self, source: str, target: str) -> float:
        return float(self.values[self.index_of(source), self.index_of(target)])

    def row(self, source: str) -> np.ndarray:
        """Outgoing affinities of one node. A view; treat it as read-only."""
        return self.values[self.index_of(source)]

    def __len__(self) -> int:
        return len(self.labels)


def _require_aligned(first: AffinityMatrix, *rest: AffinityMatrix) -> None:
    for other in rest:
        if other.labels != first.labels:
            raise AlignmentError("affinity matrices cover different node sets")


def _weights(g: Graph) -> tuple[tuple[str, ...], np.ndarray]:
    return g.labels, g.adjacency_matrix()


def best_friend(g: Graph) -> AffinityMatrix:
    """Share of x's total outgoing weight that goes directly to y.

    Rows sum to 1 for nodes with outgoing edges and are all zero otherwise.
    """
    labels, weights = _weights(g)
    totals = weights.sum(axis=1, keepdims=True)
    values = np.divide(weights, totals, out=np.zeros_like(weights), where=totals > 0)
    np.fill_diagonal(values, 0.0)
    return AffinityMatrix(labels, values)


def best_common_friend(g: Graph) -> AffinityMatrix:
    """Strongest shared contact, relative to x's total outgoing weight.

    Entry (x, y) is max over nodes a of min(w(x,a), w(y,a)), divided by the
    total outgoing weight of x. The numerator never exceeds the denominator,
    so values stay in [0, 1].
    """
    labels, weights = _weights(g)
    n = len(labels)
    totals = weights.sum(axis=1)
    values = np.zeros_like(weights)
    for x in range(n):
        if totals[x] <= 0:
            continue
        shared = np.minimum(weights[x][None, :], weights).max(axis=1)
        values[x] = shared / totals[x]
    np.fill_diagonal(values, 0.0)
    return AffinityMatrix(labels, values)


def machiavelli(g: Graph) -> AffinityMatrix:
    """Similarity of influence reach, symmetric off the diagonal.

    A node's influence is the summed total degree of its out-neighbours.
    Entry (x, y) is 1 - |i_x - i_y| / max(i_x, i_y); two nodes with zero
    influence count as perfectly similar (the 0/0 corner reads as 1).
    """
    labels, weights = _weights(g)
    n = len(labels)
    total_degree = np.array(
        [float(g.degree(lab).total) for lab in labels], dtype=np.float64
    )
    influence = (weights > 0).astype(np.float64) @ total_degree
    gap = np.abs(influence[:, None] - influence[None, :])
    peak = np.maximum(influence[:, None], influence[None, :])
    values = np.ones((n, n), dtype=np.float64)
    np.divide(gap, peak, out=gap, where=peak > 0)
    values[peak > 0] = 1.0 - gap[peak > 0]
    np.fill_diagonal(values, 0.0)
    return AffinityMatrix(labels, values)


def convex_combine(a: AffinityMatrix, b: AffinityMatrix, alpha: float) -> AffinityMatrix:
    """alpha * a + (1 - alpha) * b, with alpha in [0, 1]."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must be within [0, 1], got {alpha!r}")
    _require_aligned(a, b)
    return AffinityMatrix(a.labels, alpha * a.values + (1.0 - alpha) * b.values)


def tnorm_combine(matrices: Sequence[AffinityMatrix], norm: str = "minimum") -> AffinityMatrix:
    """Fold two or more aligned matrices with a triangular norm.

    Supported norms: minimum, product, and lukasiewicz (max(a + b - 1, 0)).
    """
    if len(matrices) < 2:
        raise ValueError("tnorm_combine needs at least two matrices")
    if norm not in TNORMS:
        raise ValueError(f"unknown t-norm: {norm!r}")
    _require_aligned(*matrices)
    acc = matrices[0].values.copy()
    for m in matrices[1:]:
        if norm == "minimum":
            acc = np.minimum(acc, m.values)
        elif norm == "product":
            acc = acc * m.values
        else:
            acc = np.maximum(acc + m.values - 1.0, 0.0)
    return AffinityMatrix(matrices[0].labels, acc)


def mixed_affinity(g: Graph, alpha: float = 0.9) -> AffinityMatrix:
    """Blend of best-friend and influence similarity used by the pipeline.

    The combination is alpha * best_friend + (1 - alpha) * machiavelli,
    then masked so that pairs with zero best-friend affinity stay zero:
    the influence term refines existing relations, it must not create new
    ones.
    """
    bf = best_friend(g)
    mach = machiavelli(g)
    mixed = convex_combine(bf, mach, alpha)
    mixed.values[bf.values == 0.0] = 0.0
    return mixed


def write_affinity_tsv(m: AffinityMatrix, path: str) -> None:
    """Write non-zero entries as ``source target value`` TSV rows, sorted."""
    for label in m.labels:
        if "\t" in label or "\n" in label or "\r" in label:
            raise ValueError(f"label not serialisable to TSV: {label!r}")
    lines = []
    for s in sorted(m.labels):
        si = m.index_of(s)
        for t in sorted(m.labels):
            v = float(m.values[si, m.index_of(t)])
            if v != 0.0:
                lines.append(f"{s}\t{t}\t{v!r}\n")
    write_text_atomic(path, "".join(lines))
