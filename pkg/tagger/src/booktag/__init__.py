"""Plain-text books to tagged-token files."""

from .gutenberg import strip_boilerplate
from .pipeline import BookSource, ReportCounts, report_counts, split_chapters, tag_book
from .tagging import lemmatize, singularize, tag_token, tokenize

__version__ = "0.1.0"

__all__ = [
    "BookSource",
    "ReportCounts",
    "lemmatize",
    "report_counts",
    "singularize",
    "split_chapters",
    "strip_boilerplate",
    "tag_book",
    "tag_token",
    "tokenize",
]
