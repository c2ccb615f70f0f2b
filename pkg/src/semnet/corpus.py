"""Tagged-token files and co-occurrence networks.

Input is the three-column token format: one ``surface<TAB>pos<TAB>lemma``
line per token, blank line between documents, ``#`` lines ignored. Token
positions are assigned per document in reading order, before any
filtering, so windows measured after a filter still reflect distance in
the original text.
"""

from __future__ import annotations

import os
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ParseError
from .graphs import Graph, fuse


@dataclass(frozen=True)
class TaggedToken:
    surface: str
    pos: str
    lemma: str
    position: int


@dataclass(frozen=True)
class DocumentStream:
    """One document's tokens, positions strictly increasing."""

    doc_id: str
    tokens: tuple[TaggedToken, ...]


def book_stem(path: str | os.PathLike[str]) -> str:
    """Base name of a token file without its format suffix."""
    name = os.path.basename(os.fspath(path))
    for suffix in (".tok.tsv", ".tsv", ".txt"):
        if name.endswith(suffix):
            return name[: -len(suffix)]
    return name


def read_token_file(path: str | os.PathLike[str]) -> list[DocumentStream]:
    """Parse a token file into per-document streams.

    Comment lines do not consume a position. Lemmas are lowercased on
    input. Empty documents (consecutive blank lines) are dropped.
    """
    docs: list[DocumentStream] = []
    current: list[TaggedToken] = []
    stem = book_stem(path)

    def flush() -> None:
        if current:
            docs.append(DocumentStream(f"{stem}:{len(docs)}", tuple(current)))
            current.clear()

    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.rstrip("\n").rstrip("\r")
            if line.startswith("#"):
                continue
            if not line.strip():
                flush()
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(
                    path, lineno,
                    f"expected surface<TAB>pos<TAB>lemma, got {len(parts)} fields",
                )
            surface, pos, lemma = (p.strip() for p in parts)
            if not surface or not pos or not lemma:
                raise ParseError(path, lineno, "empty field in token line")
            current.append(TaggedToken(surface, pos, lemma.lower(), len(current)))
    flush()
    return docs


def filter_nouns(doc: DocumentStream) -> DocumentStream:
    """Keep only noun tokens (POS tag starting with NN); positions survive."""
    kept = tuple(t for t in doc.tokens if t.pos.startswith("NN"))
    return DocumentStream(doc.doc_id, kept)


def cooccurrence_network(doc: DocumentStream, window: int = 10) -> Graph:
    """Directed co-occurrence graph of one document.

    For every token pair at original-text distance 1..window, an edge runs
    from the earlier lemma to the later one, accumulating weight 1 per
    pair. Pairs of the same lemma are skipped (no self-loops). Every token
    contributes a node even when isolated.
    """
    if window < 1:
        raise ValueError("window must be at least 1")
    weights: dict[tuple[str, str], int] = defaultdict(int)
    g = Graph()
    tokens = doc.tokens
    for t in tokens:
        g.add_node(t.lemma)
    for i, earlier in enumerate(tokens):
        j = i + 1
        while j < len(tokens) and tokens[j].position - earlier.position <= window:
            later = tokens[j]
            if later.lemma != earlier.lemma:
                weights[(earlier.lemma, later.lemma)] += 1
            j += 1
    for (s, t), w in weights.items():
        g.add_edge(s, t, float(w))
    return g


def frequency_table(docs: Iterable[DocumentStream]) -> dict[str, int]:
    """Lemma counts over a collection of documents."""
    counts: Counter[str] = Counter()
    for doc in docs:
        counts.update(t.lemma for t in doc.tokens)
    return dict(counts)


def build_book_network(
    docs: Sequence[DocumentStream], window: int = 10, duplicate_rule: str = "max"
) -> Graph:
    """Per-document networks fused into one book-level graph.

    Duplicate edges across documents combine by ``duplicate_rule``: "max"
    (default) keeps the strongest single-document weight, "sum" adds them.
    """
    if not docs:
        return Graph()
    return fuse([cooccurrence_network(d, window) for d in docs], rule=duplicate_rule)
