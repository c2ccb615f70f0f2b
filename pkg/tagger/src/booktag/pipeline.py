"""Book text to tagged-token output: chapters, tags, lemmas, counts."""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass

from .gutenberg import strip_boilerplate
from .tagging import SENTENCE_END, lemmatize, tag_token, tokenize

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BookSource:
    """Raw book text plus how to cut it into chapters."""

    text: str
    chapter_pattern: str | None = None
    book_id: str = "book"


@dataclass(frozen=True)
class ReportCounts:
    book_id: str
    chapters: int
    words: int
    entities: int


def split_chapters(source: BookSource) -> list[str]:
    """Chapter bodies after boilerplate stripping.

    The pattern is matched in multiline mode; text before the first match
    (front matter, contents) is dropped and each heading match itself is
    excluded from its chapter. Without a pattern, or when the pattern
    never matches, the whole text is one chapter. Whitespace-only chapters
    are skipped with a warning.
    """
    text = strip_boilerplate(source.text)
    if not text.strip():
        raise ValueError(f"{source.book_id}: no text left after boilerplate stripping")
    if source.chapter_pattern:
        matches = list(re.finditer(source.chapter_pattern, text, re.MULTILINE))
    else:
        matches = []
    if not matches:
        return [text]
    chapters: list[str] = []
    for i, match in enumerate(matches):
        end = matches[i + 1].start() if i + 1 < len(matches) else len(text)
        body = text[match.end():end]
        if not body.strip():
            log.warning("%s: empty chapter at offset %d skipped",
                        source.book_id, match.start())
            continue
        chapters.append(body)
    if not chapters:
        raise ValueError(f"{source.book_id}: every chapter is empty")
    return chapters


def _lower_spellings(chapters: list[str]) -> set[str]:
    """Spellings that occur in lowercase anywhere in the book."""
    seen: set[str] = set()
    for chapter in chapters:
        for token in tokenize(chapter):
            if token[0].islower():
                seen.add(token)
    return seen


def tag_chapter(chapter: str, lower_spellings: set[str]) -> list[tuple[str, str, str]]:
    """(surface, tag, lemma) triples for one chapter.

    Sentence starts (used by the proper-noun rule) reset at paragraph
    breaks and after ./!/? tokens; intervening quotes keep the flag.
    """
    rows: list[tuple[str, str, str]] = []
    for paragraph in re.split(r"\n\s*\n", chapter):
        sentence_initial = True
        for surface in tokenize(paragraph):
            tag = tag_token(surface, sentence_initial, lower_spellings)
            rows.append((surface, tag, lemmatize(surface, tag)))
            if any(c.isalnum() for c in surface):
                sentence_initial = False
            elif surface in SENTENCE_END:
                sentence_initial = True
    return rows


def tag_book(source: BookSource) -> str:
    """Full tagged-token file content: one blank-line-separated block per chapter."""
    if not source.text.strip():
        raise ValueError(f"{source.book_id}: empty input")
    chapters = split_chapters(source)
    lower_spellings = _lower_spellings(chapters)
    blocks: list[str] = []
    for chapter in chapters:
        rows = tag_chapter(chapter, lower_spellings)
        if not rows:
            log.warning("%s: chapter produced no tokens, skipped", source.book_id)
            continue
        blocks.append("".join(f"{s}\t{t}\t{lem}\n" for s, t, lem in rows))
    if not blocks:
        raise ValueError(f"{source.book_id}: no tokens in any chapter")
    return "\n".join(blocks)


def report_counts(source: BookSource) -> ReportCounts:
    """Chapter, word-token, and distinct-noun-lemma counts for one book."""
    content = tag_book(source)
    blocks = [b for b in content.split("\n\n") if b.strip()]
    words = 0
    entities: set[str] = set()
    for block in blocks:
        for line in block.splitlines():
            surface, tag, lemma = line.split("\t")
            if any(c.isalnum() for c in surface):
                words += 1
            if tag.startswith("NN"):
                entities.add(lemma)
    return ReportCounts(source.book_id, len(blocks), words, len(entities))
