"""Strip the header/footer boilerplate from Gutenberg plain-text files."""

from __future__ import annotations

import re

_START = re.compile(r"^\s*\*\*\*\s*START OF (?:THE|THIS) PROJECT GUTENBERG.*$",
                    re.IGNORECASE | re.MULTILINE)
_END = re.compile(r"^\s*\*\*\*\s*END OF (?:THE|THIS) PROJECT GUTENBERG.*$",
                  re.IGNORECASE | re.MULTILINE)


def strip_boilerplate(text: str) -> str:
    """Text between the standard start/end markers.

    Files without markers pass through unchanged, so already-clean text is
    accepted. A start marker without an end marker keeps everything after
    the start.
    """
    start = _START.search(text)
    if start:
        text = text[start.end():]
    end = _END.search(text)
    if end:
        text = text[: end.start()]
    return text
