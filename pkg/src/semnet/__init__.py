"""Co-occurrence networks, affinity functions, and semantic-value analytics."""

from .affinity import (
    AffinityMatrix,
    best_common_friend,
    best_friend,
    convex_combine,
    machiavelli,
    mixed_affinity,
    tnorm_combine,
    write_affinity_tsv,
)
from .corpus import (
    DocumentStream,
    TaggedToken,
    book_stem,
    build_book_network,
    cooccurrence_network,
    filter_nouns,
    frequency_table,
    read_token_file,
)
from .errors import AlignmentError, ConvergenceError, ParseError
from .graphs import (
    CentralityScores,
    DegreeCounts,
    Graph,
    betweenness,
    closeness,
    eigenvector,
    fuse,
    read_edge_list,
    top_n_subgraph,
    write_edge_list,
)
from .pipe import (
    CapacityState,
    HopFlow,
    PipeResult,
    efficient_path,
    fill_path,
    pipe_comparison,
    semantic_affinity_matrix,
    write_semantic_affinity_csv,
)
from .semantics import (
    FrequencyTable,
    SemanticScores,
    extrinsic,
    read_frequency_csv,
    semantic_value,
    write_frequency_csv,
    write_scores_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AffinityMatrix",
    "AlignmentError",
    "CapacityState",
    "CentralityScores",
    "ConvergenceError",
    "DegreeCounts",
    "DocumentStream",
    "FrequencyTable",
    "Graph",
    "HopFlow",
    "ParseError",
    "PipeResult",
    "SemanticScores",
    "TaggedToken",
    "best_common_friend",
    "best_friend",
    "betweenness",
    "book_stem",
    "build_book_network",
    "closeness",
    "convex_combine",
    "cooccurrence_network",
    "efficient_path",
    "eigenvector",
    "extrinsic",
    "fill_path",
    "filter_nouns",
    "frequency_table",
    "fuse",
    "machiavelli",
    "mixed_affinity",
    "pipe_comparison",
    "read_edge_list",
    "read_frequency_csv",
    "read_token_file",
    "semantic_affinity_matrix",
    "semantic_value",
    "tnorm_combine",
    "top_n_subgraph",
    "write_affinity_tsv",
    "write_edge_list",
    "write_frequency_csv",
    "write_scores_csv",
    "write_semantic_affinity_csv",
]
