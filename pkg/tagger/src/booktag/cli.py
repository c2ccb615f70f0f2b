"""Command-line front end: one book in, one tagged-token file out."""

from __future__ import annotations

import argparse
import logging
import os
import sys
import tempfile
from pathlib import Path

from .pipeline import BookSource, report_counts, tag_book


def _write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix="~")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="booktag",
        description="Split a plain-text book into chapters and emit "
                    "surface/POS/lemma token lines.",
    )
    parser.add_argument("--in", dest="infile", required=True,
                        help="plain-text book (Gutenberg boilerplate is stripped)")
    parser.add_argument("--out", dest="outfile", required=True,
                        help="tagged-token output file (.tok.tsv)")
    parser.add_argument("--chapter-pattern", default=None,
                        help="multiline regex marking chapter headings; "
                             "omit to treat the whole book as one chapter")
    parser.add_argument("--report", action="store_true",
                        help="print chapter/word/entity counts to stdout")
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(format="%(levelname)s %(message)s")
    args = build_parser().parse_args(argv)
    try:
        text = Path(args.infile).read_text(encoding="utf-8")
        book_id = Path(args.infile).stem
        source = BookSource(text, args.chapter_pattern, book_id)
        _write_atomic(args.outfile, tag_book(source))
        print(f"wrote {args.outfile}")
        if args.report:
            counts = report_counts(source)
            print(f"{counts.book_id}: chapters={counts.chapters} "
                  f"words={counts.words} entities={counts.entities}")
        return 0
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
