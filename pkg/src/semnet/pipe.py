"""Capacity-limited affinity routing between two nodes.

The model: the source holds liquid equal to its own semantic value, and
every node can absorb liquid up to its semantic value. Liquid flows along
the most efficient affinity path; each traversed hop multiplies the flow
by its affinity and each visited node keeps what it absorbs. Paths are
searched and filled one at a time until the liquid is spent, the target
is saturated, or no usable path remains. A path that has been filled once
is not searched again: every edge carries flow at most once per
comparison.

The final affinity between x and y combines how similar their semantic
values are, the mean affinity of the edges that actually carried flow,
and a correction for how strong x's best direct affinity is.
"""

from __future__ import annotations

import csv
import heapq
import io
import math
from dataclasses import dataclass, field

from .affinity import AffinityMatrix
from .errors import AlignmentError
from .graphs import Graph
from .ioutil import write_text_atomic
from .semantics import SemanticScores


@dataclass
class CapacityState:
    """Mutable bookkeeping for one routing run.

    capacities: remaining absorption per node, never negative.
    liquid: what the source still has to send.
    used_edges: ordered pairs that already carried flow; excluded from
    later path searches.
    """

    capacities: dict[str, float]
    liquid: float
    epsilon: float = 1e-9
    used_edges: set[tuple[str, str]] = field(default_factory=set)


@dataclass(frozen=True)
class HopFlow:
    """One hop of a filled path: the edge, its affinity, and what got through."""

    source: str
    target: str
    affinity: float
    carried: float


@dataclass(frozen=True)
class PipeResult:
    """Outcome of one source-to-target comparison."""

    delivered: float
    used_affinities: tuple[float, ...]
    paths: tuple[tuple[str, ...], ...]
    affinity: float
    iterations: int
    remaining: dict[str, float]


def efficient_path(
    g: Graph, f: AffinityMatrix, state: CapacityState, source: str, target: str
) -> list[str] | None:
    """Most efficient usable path from source to target, or None.

    Efficiency of a path is the product of its hop affinities, maximised by
    running Dijkstra on hop length -ln(affinity). A hop is usable when its
    affinity is positive, it has not carried flow before, and its head node
    still has capacity above epsilon. Ties break on node index, so the
    search is deterministic.
    """
    if source not in g or target not in g:
        raise KeyError(f"unknown node label: {source if source not in g else target!r}")
    labels = f.labels
    values = f.values
    start = f.index_of(source)
    goal = f.index_of(target)
    dist: dict[int, float] = {start: 0.0}
    prev: dict[int, int] = {}
    done: set[int] = set()
    heap: list[tuple[float, int]] = [(0.0, start)]
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == goal:
            path = [labels[goal]]
            v = goal
            while v != start:
                v = prev[v]
                path.append(labels[v])
            path.reverse()
            return path
        u_label = labels[u]
        row = values[u]
        for v in range(len(labels)):
            a = row[v]
            if a <= 0.0 or v in done:
                continue
            v_label = labels[v]
            if (u_label, v_label) in state.used_edges:
                continue
            if state.capacities.get(v_label, 0.0) <= state.epsilon:
                continue
            nd = d - math.log(a)
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                prev[v] = u
                heapq.heappush(heap, (nd, v))
    return None


def fill_path(
    g: Graph, f: AffinityMatrix, state: CapacityState, path: list[str]
) -> list[HopFlow]:
    """Push the state's liquid down one path, hop by hop.

    Each hop multiplies the incoming flow by its affinity, then the head
    node absorbs at most its remaining capacity; what it absorbed is what
    travels on. The state is updated in place: capacities drop by what
    each node absorbed, the source's liquid drops by what left it (the
    first hop's carried amount), and every hop that carried anything is
    marked used.
    """
    if len(path) < 2:
        raise ValueError("path must contain at least two nodes")
    if len(set(path)) != len(path):
        raise ValueError("path must not repeat nodes")
    for label in path:
        if label not in g:
            raise KeyError(f"unknown node label: {label!r}")
    if state.liquid <= state.epsilon:
        raise ValueError("no liquid left to send")
    hops: list[HopFlow] = []
    flow = state.liquid
    for a, b in zip(path, path[1:]):
        aff = f.value(a, b)
        if aff <= 0.0:
            raise ValueError(f"path uses a zero-affinity hop: {a!r} -> {b!r}")
        carried = min(state.capacities[b], aff * flow)
        carried = max(carried, 0.0)
        state.capacities[b] -= carried
        if carried > 0.0:
            state.used_edges.add((a, b))
        hops.append(HopFlow(a, b, aff, carried))
        flow = carried
    state.liquid -= hops[0].carried
    return hops


def pipe_comparison(
    g: Graph,
    f: AffinityMatrix,
    scores: SemanticScores,
    source: str,
    target: str,
    epsilon: float = 1e-9,
    max_iterations: int | None = None,
) -> PipeResult:
    """Run the full routing loop from source to target.

    Returns the total liquid delivered to the target, the affinities of
    all hops that carried flow, the paths used, and the final affinity
    value. The loop stops when no usable path remains, the liquid is
    spent, or the target is saturated; a hard cap (10 times the node
    count by default) bounds it regardless.

    The affinity value is

        (1 - |S(x) - S(y)| / max(S(x), S(y)))
        * mean(used affinities)
        * 1 / max over z of F(x, z)

    and 0 when nothing flowed, when x has no positive outgoing affinity,
    or when both semantic values are zero. A node compared against itself
    scores 1 by convention, but source must differ from target here.
    """
    if f.labels != g.labels:
        raise AlignmentError("affinity matrix is not aligned with the graph")
    if source == target:
        raise ValueError("source and target must differ")
    if source not in g or target not in g:
        raise KeyError(f"unknown node label: {source if source not in g else target!r}")
    if epsilon <= 0.0:
        raise ValueError("epsilon must be positive")
    s_src = scores.semantic[source]
    s_tgt = scores.semantic[target]
    cap = max_iterations if max_iterations is not None else 10 * len(g)
    state = CapacityState(
        capacities={lab: scores.semantic[lab] for lab in g.labels},
        liquid=s_src,
        epsilon=epsilon,
    )
    used: list[float] = []
    paths: list[tuple[str, ...]] = []
    delivered = 0.0
    iterations = 0
    if s_src > 0.0:
        while iterations < cap:
            if state.liquid <= epsilon or state.capacities[target] <= epsilon:
                break
            path = efficient_path(g, f, state, source, target)
            if path is None:
                break
            iterations += 1
            hops = fill_path(g, f, state, path)
            used.extend(h.affinity for h in hops if h.carried > 0.0)
            delivered += hops[-1].carried
            paths.append(tuple(path))
    peak = float(f.row(source).max()) if len(g) else 0.0
    top = max(s_src, s_tgt)
    if not used or peak <= 0.0 or top <= 0.0:
        value = 0.0
    else:
        balance = 1.0 - abs(s_src - s_tgt) / top
        value = balance * (sum(used) / len(used)) / peak
    return PipeResult(
        delivered=delivered,
        used_affinities=tuple(used),
        paths=tuple(paths),
        affinity=value,
        iterations=iterations,
        remaining=dict(state.capacities),
    )


def semantic_affinity_matrix(
    g: Graph,
    f: AffinityMatrix,
    scores: SemanticScores,
    nodes: list[str] | None = None,
    epsilon: float = 1e-9,
) -> dict[str, dict[str, float]]:
    """Pairwise routing affinity over the given nodes (all nodes if None).

    Each ordered pair runs its own comparison on fresh capacities. The
    diagonal is 1 by convention.
    """
    selected = list(nodes) if nodes is not None else list(g.labels)
    if len(set(selected)) != len(selected):
        raise ValueError("node list contains duplicates")
    for label in selected:
        if label not in g:
            raise KeyError(f"unknown node label: {label!r}")
    out: dict[str, dict[str, float]] = {}
    for x in selected:
        row: dict[str, float] = {}
        for y in selected:
            if x == y:
                row[y] = 1.0
            else:
                row[y] = pipe_comparison(g, f, scores, x, y, epsilon=epsilon).affinity
        out[x] = row
    return out


def write_semantic_affinity_csv(
    matrix: dict[str, dict[str, float]], nodes: list[str], path: str
) -> None:
    """Write the routing-affinity table as CSV with 6-decimal values."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["node", *nodes])
    for x in nodes:
        writer.writerow([x, *(f"{matrix[x][y]:.6f}" for y in nodes)])
    write_text_atomic(path, buf.getvalue())
