"""Semantic value: corpus frequency plus affinity-discounted neighbour mass.

A node's intrinsic value I is its raw corpus frequency. Its extrinsic
value E collects what each in-neighbour passes along, discounted by how
much of that neighbour's attention is already explained by other
in-neighbours; negative contributions are clipped to zero. The semantic
value is S = I + E.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np

from .affinity import AffinityMatrix
from .errors import AlignmentError, ParseError
from .graphs import Graph
from .ioutil import write_text_atomic

FrequencyTable = dict[str, int]


@dataclass(frozen=True)
class SemanticScores:
    """Intrinsic, extrinsic, and combined scores keyed by node label."""

    intrinsic: dict[str, float]
    extrinsic: dict[str, float]
    semantic: dict[str, float]


def _require_graph_aligned(g: Graph, f: AffinityMatrix) -> None:
    if f.labels != g.labels:
        raise AlignmentError("affinity matrix is not aligned with the graph")


def extrinsic(g: Graph, f: AffinityMatrix, freq: FrequencyTable) -> dict[str, float]:
    """Extrinsic value per node.

    For node x with in-neighbours N (nodes with positive affinity towards
    x), each neighbour i contributes

        max(F(i, x) * I(i)  -  sum over j in N, j != i of
            F(i, j) * I(i) * F(j, x),  0)

    i.e. its own pull on x minus the part already routed through the other
    neighbours, floored at zero. Nodes absent from ``freq`` have I = 0.
    """
    _require_graph_aligned(g, f)
    labels = g.labels
    values = f.values
    intrinsic = np.array([float(freq.get(lab, 0)) for lab in labels], dtype=np.float64)
    out: dict[str, float] = {}
    for x, label in enumerate(labels):
        nbrs = np.nonzero(values[:, x] > 0.0)[0]
        if nbrs.size == 0:
            out[label] = 0.0
            continue
        pull = values[nbrs, x]
        # F[i, j] @ F[j, x] over the neighbour block; the j == i term is
        # free because the diagonal of an affinity matrix is zero.
        routed = values[np.ix_(nbrs, nbrs)] @ pull
        terms = pull * intrinsic[nbrs] - intrinsic[nbrs] * routed
        out[label] = float(np.maximum(terms, 0.0).sum())
    return out


def semantic_value(g: Graph, f: AffinityMatrix, freq: FrequencyTable) -> SemanticScores:
    """Intrinsic, extrinsic, and S = I + E for every node of the graph."""
    ext = extrinsic(g, f, freq)
    intr = {lab: float(freq.get(lab, 0)) for lab in g.labels}
    sem = {lab: intr[lab] + ext[lab] for lab in g.labels}
    return SemanticScores(intr, ext, sem)


# -- frequency and score files -------------------------------------------


def write_frequency_csv(freq: FrequencyTable, path: str) -> None:
    """Write ``node,count`` rows in lexicographic node order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node", "count"])
    for label in sorted(freq):
        writer.writerow([label, freq[label]])
    write_text_atomic(path, buf.getvalue())


def read_frequency_csv(path: str) -> FrequencyTable:
    """Parse a ``node,count`` CSV; header required, counts non-negative ints."""
    freq: FrequencyTable = {}
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        for lineno, row in enumerate(reader, 1):
            if not row:
                continue
            if lineno == 1:
                if row != ["node", "count"]:
                    raise ParseError(path, lineno, f"expected header node,count, got {row!r}")
                continue
            if len(row) != 2:
                raise ParseError(path, lineno, f"expected 2 fields, got {len(row)}")
            label, raw = row
            try:
                count = int(raw)
            except ValueError:
                raise ParseError(path, lineno, f"bad count: {raw!r}") from None
            if count < 0 or not label:
                raise ParseError(path, lineno, f"bad frequency row: {row!r}")
            if label in freq:
                raise ParseError(path, lineno, f"duplicate node: {label!r}")
            freq[label] = count
    return freq


def write_scores_csv(scores: SemanticScores, path: str) -> None:
    """Write ``node,I,E,S`` rows in lexicographic node order."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node", "I", "E", "S"])
    for label in sorted(scores.semantic):
        writer.writerow([
            label,
            int(scores.intrinsic[label]),
            repr(scores.extrinsic[label]),
            repr(scores.semantic[label]),
        ])
    write_text_atomic(path, buf.getvalue())
