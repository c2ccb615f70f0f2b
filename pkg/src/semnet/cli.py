"""Command-line pipeline from token files to networks, scores, and affinities.

Subcommands:
  build        token files -> per-book edge list + frequency CSV
  fuse         edge lists + frequency CSVs -> one global pair
  scores       edge list + frequencies -> per-node score/centrality CSV
  semaffinity  edge list + frequencies -> routing-affinity matrix CSV
  affinity     ranked affinities of one node, printed to stdout

All file outputs are written atomically and are byte-identical across
runs on identical inputs.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import affinity as aff
from . import corpus, graphs, pipe, semantics
from .errors import AlignmentError, ConvergenceError, ParseError
from .ioutil import write_text_atomic

AFFINITY_KINDS = ("bf", "bcf", "mach", "mix")


@dataclass
class RunConfig:
    """Validated knob set shared by the subcommands."""

    window: int = 10
    top: int = 300
    alpha: float = 0.9
    affinity_kind: str = "mix"
    epsilon: float = 1e-9
    tol: float = 1e-10
    max_iter: int = 1000
    out_dir: Path = Path(".")
    seed: int | None = None  # reserved; the pipeline is deterministic

    def validate(self) -> None:
        if self.window < 1:
            raise ValueError(f"--window must be at least 1, got {self.window}")
        if self.top < 1:
            raise ValueError(f"--top must be at least 1, got {self.top}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"--alpha must be within [0, 1], got {self.alpha}")
        if self.affinity_kind not in AFFINITY_KINDS:
            raise ValueError(f"--affinity must be one of {AFFINITY_KINDS}")
        if self.epsilon <= 0.0:
            raise ValueError(f"--epsilon must be positive, got {self.epsilon}")
        if self.tol <= 0.0 or self.max_iter < 1:
            raise ValueError("tolerance must be positive and max-iter at least 1")


def _affinity_matrix(config: RunConfig, g: graphs.Graph) -> aff.AffinityMatrix:
    if config.affinity_kind == "bf":
        return aff.best_friend(g)
    if config.affinity_kind == "bcf":
        return aff.best_common_friend(g)
    if config.affinity_kind == "mach":
        return aff.machiavelli(g)
    return aff.mixed_affinity(g, config.alpha)


def _out_path(config: RunConfig, name: str) -> str:
    config.out_dir.mkdir(parents=True, exist_ok=True)
    return str(config.out_dir / name)


def _load_reduced(config: RunConfig, edges: str, freq_path: str):
    """Read a network and its frequencies, reduced to the top-n nodes."""
    g = graphs.read_edge_list(edges)
    freq = semantics.read_frequency_csv(freq_path)
    sub = graphs.top_n_subgraph(g, freq, config.top) if len(g) else g
    return sub, freq


def cmd_build(config: RunConfig, args: argparse.Namespace) -> int:
    for token_file in args.token_files:
        docs = [corpus.filter_nouns(d) for d in corpus.read_token_file(token_file)]
        net = corpus.build_book_network(docs, window=config.window)
        freq = corpus.frequency_table(docs)
        stem = corpus.book_stem(token_file)
        edges_path = _out_path(config, f"{stem}.edges.tsv")
        freq_path = _out_path(config, f"{stem}.freq.csv")
        graphs.write_edge_list(net, edges_path)
        semantics.write_frequency_csv(freq, freq_path)
        print(f"wrote {edges_path}")
        print(f"wrote {freq_path}")
    return 0


def cmd_fuse(config: RunConfig, args: argparse.Namespace) -> int:
    nets = [graphs.read_edge_list(p) for p in args.edges]
    fused = graphs.fuse(nets, rule=args.rule)
    totals: dict[str, int] = {}
    for p in args.freqs:
        for label, count in semantics.read_frequency_csv(p).items():
            totals[label] = totals.get(label, 0) + count
    edges_path = _out_path(config, f"{args.out_prefix}.edges.tsv")
    freq_path = _out_path(config, f"{args.out_prefix}.freq.csv")
    graphs.write_edge_list(fused, edges_path)
    semantics.write_frequency_csv(totals, freq_path)
    print(f"wrote {edges_path}")
    print(f"wrote {freq_path}")
    return 0


_SCORE_HEADER = ["node", "I", "E", "S", "degree", "betweenness", "closeness", "eigenvector"]


def cmd_scores(config: RunConfig, args: argparse.Namespace) -> int:
    g, freq = _load_reduced(config, args.edges, args.freq)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_SCORE_HEADER)
    if len(g):
        f = _affinity_matrix(config, g)
        scores = semantics.semantic_value(g, f, freq)
        between = graphs.betweenness(g)
        close = graphs.closeness(g)
        try:
            eigen = graphs.eigenvector(g, tol=config.tol, max_iter=config.max_iter)
            eigenvalues = eigen.values
        except ValueError:
            # Graph without edges: report zero.
            eigenvalues = {lab: 0.0 for lab in g.labels}
        order = sorted(g.labels, key=lambda lab: (-scores.semantic[lab], lab))
        for lab in order:
            writer.writerow([
                lab,
                int(scores.intrinsic[lab]),
                f"{scores.extrinsic[lab]:.2f}",
                f"{scores.semantic[lab]:.2f}",
                g.degree(lab).total,
                f"{between[lab]:.2f}",
                f"{close[lab]:.2f}",
                f"{eigenvalues[lab]:.2f}",
            ])
    out = args.out or _out_path(config, _strip_edges_stem(args.edges) + ".scores.csv")
    write_text_atomic(out, buf.getvalue())
    print(f"wrote {out}")
    return 0


def _strip_edges_stem(path: str) -> str:
    name = os.path.basename(path)
    for suffix in (".edges.tsv", ".tsv"):
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return name


def cmd_semaffinity(config: RunConfig, args: argparse.Namespace) -> int:
    g, freq = _load_reduced(config, args.edges, args.freq)
    if args.nodes:
        nodes = [n.strip() for n in args.nodes.split(",") if n.strip()]
    else:
        # Default focus: the ten most frequent nodes of the reduced graph.
        nodes = sorted(g.labels, key=lambda lab: (-freq.get(lab, 0), lab))[:10]
    if not nodes:
        raise ValueError("no nodes to compare")
    for label in nodes:
        if label not in g:
            raise ValueError(f"unknown node label: {label}")
    f = _affinity_matrix(config, g)
    scores = semantics.semantic_value(g, f, freq)
    matrix = pipe.semantic_affinity_matrix(g, f, scores, nodes, epsilon=config.epsilon)
    out = args.out or _out_path(config, _strip_edges_stem(args.edges) + ".semaffinity.csv")
    pipe.write_semantic_affinity_csv(matrix, nodes, out)
    print(f"wrote {out}")
    return 0


def cmd_affinity(config: RunConfig, args: argparse.Namespace) -> int:
    g = graphs.read_edge_list(args.edges)
    if args.freq:
        freq = semantics.read_frequency_csv(args.freq)
        g = graphs.top_n_subgraph(g, freq, config.top) if len(g) else g
    if args.node not in g:
        raise ValueError(f"unknown node label: {args.node}")
    f = _affinity_matrix(config, g)
    row = f.row(args.node)
    ranked = sorted(
        ((float(row[f.index_of(lab)]), lab) for lab in g.labels if lab != args.node),
        key=lambda item: (-item[0], item[1]),
    )
    limit = args.limit if args.limit is not None else len(ranked)
    rank = 0
    for value, label in ranked:
        if value <= 0.0 or rank >= limit:
            break
        rank += 1
        print(f"{config.affinity_kind}\t{rank}\t{label}\t{value:.6f}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--window", type=int, default=10,
                        help="co-occurrence window in original token positions")
    shared.add_argument("--top", type=int, default=300,
                        help="keep only the N most frequent nodes")
    shared.add_argument("--alpha", type=float, default=0.9,
                        help="weight of the best-friend term in the mixed affinity")
    shared.add_argument("--affinity", choices=AFFINITY_KINDS, default="mix",
                        dest="affinity_kind", help="affinity function to use")
    shared.add_argument("--epsilon", type=float, default=1e-9,
                        help="capacity threshold for the routing loop")
    shared.add_argument("--out-dir", type=Path, default=Path("."),
                        help="directory for output files")
    shared.add_argument("--seed", type=int, default=None,
                        help="reserved for future stochastic features")

    parser = argparse.ArgumentParser(
        prog="semnet",
        description="Co-occurrence networks, semantic value, and affinity tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", parents=[shared],
                             help="turn token files into edge lists and frequencies")
    p_build.add_argument("token_files", nargs="+")
    p_build.set_defaults(func=cmd_build)

    p_fuse = sub.add_parser("fuse", parents=[shared],
                            help="merge per-book networks and frequencies")
    p_fuse.add_argument("--edges", nargs="+", required=True)
    p_fuse.add_argument("--freqs", nargs="+", required=True)
    p_fuse.add_argument("--out-prefix", required=True)
    p_fuse.add_argument("--rule", choices=("max", "sum"), default="max")
    p_fuse.set_defaults(func=cmd_fuse)

    p_scores = sub.add_parser("scores", parents=[shared],
                              help="semantic values and centralities per node")
    p_scores.add_argument("--edges", required=True)
    p_scores.add_argument("--freq", required=True)
    p_scores.add_argument("--out", default=None)
    p_scores.set_defaults(func=cmd_scores)

    p_sem = sub.add_parser("semaffinity", parents=[shared],
                           help="pairwise routing-affinity matrix")
    p_sem.add_argument("--edges", required=True)
    p_sem.add_argument("--freq", required=True)
    p_sem.add_argument("--nodes", default=None,
                       help="comma-separated node labels (default: top 10 by frequency)")
    p_sem.add_argument("--out", default=None)
    p_sem.set_defaults(func=cmd_semaffinity)

    p_aff = sub.add_parser("affinity", parents=[shared],
                           help="ranked affinities of one node, to stdout")
    p_aff.add_argument("--edges", required=True)
    p_aff.add_argument("--freq", default=None)
    p_aff.add_argument("--node", required=True)
    p_aff.add_argument("--limit", type=int, default=None)
    p_aff.set_defaults(func=cmd_affinity)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        window=args.window,
        top=args.top,
        alpha=args.alpha,
        affinity_kind=args.affinity_kind,
        epsilon=args.epsilon,
        out_dir=args.out_dir,
        seed=args.seed,
    )
    try:
        config.validate()
        return args.func(config, args)
    except (ParseError, AlignmentError, ConvergenceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: unknown node label {exc.args[0]!r}", file=sys.stderr)
        return 1
