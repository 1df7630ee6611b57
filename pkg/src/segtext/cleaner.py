"""Destructive pre-filter for noisy text.

Everything here rewrites the input, so it only runs when the caller opted in
via ``clean=True`` (never together with char spans).  Rules are ordered so a
second pass is a no-op: strip markup, protect URLs, drop table-of-contents
lines, repair newlines, then repair missing spaces.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .config import DocType, ErrorKind, SegmenterError
from .placeholders import URL_PERIOD, scan_reserved

_HTML_TAG_RE = re.compile(r"</?[A-Za-z][^<>]*>")
_URL_RE = re.compile(r"(?:(?:https?|ftp)://|www\.)[^\s<>\"]+")
# Title, a dot leader of five or more periods, then a page number.
_TOC_LINE_RE = re.compile(r"^[^\n]{0,120}?\.{5,}\s*\d+\s*$", re.MULTILINE)
# Plain text: a newline is noise when a lowercase letter continues the line.
_PLAIN_NEWLINE_RE = re.compile(r"(?<=[^\s.!?…:])[ \t]*\n(?=[ \t]*[a-zà-öø-ÿ])")
# PDF text: any line break not preceded by a terminal is a wrap artifact.
_PDF_NEWLINE_RE = re.compile(r"(?<=[^\s.!?…:])[ \t]*\n(?=[ \t]*\S)")
# Glued sentences: "end.Next" -> "end. Next"; the lowercase guard keeps
# dotted acronyms and version strings intact.
_MISSING_SPACE_RE = re.compile(r"(?<=[a-zà-öø-ÿ])([.!?])(?=[A-Z])")


@dataclass(frozen=True)
class CleanReport:
    output: str
    actions: tuple[tuple[str, int], ...]


def clean(text: str, doc_type: DocType = DocType.PLAIN) -> CleanReport:
    """Apply the cleaning rules in order and report per-rule counts."""
    if scan_reserved(text):
        raise SegmenterError(
            ErrorKind.RESERVED_CODEPOINT_IN_INPUT,
            "input contains codepoints from the reserved block U+E000..U+E07F",
        )
    actions: list[tuple[str, int]] = []

    def run(rule_id: str, pattern: re.Pattern[str], repl, s: str) -> str:
        out, count = pattern.subn(repl, s)
        actions.append((rule_id, count))
        return out

    text = text.replace("\r\n", "\n").replace("\r", "\n")
    text = run("strip-html-tags", _HTML_TAG_RE, "", text)

    # Mask URL periods so later rules cannot mangle addresses; restored below.
    protected: list[str] = []

    def protect(m: re.Match[str]) -> str:
        protected.append(m.group(0))
        return m.group(0).replace(".", URL_PERIOD)

    text = _URL_RE.sub(protect, text)
    actions.append(("protect-urls", len(protected)))

    text = run("drop-toc-lines", _TOC_LINE_RE, "", text)
    if doc_type is DocType.PDF:
        text = run("join-wrapped-lines", _PDF_NEWLINE_RE, " ", text)
    else:
        text = run("join-wrapped-lines", _PLAIN_NEWLINE_RE, " ", text)
    text = run("missing-space-after-terminal", _MISSING_SPACE_RE, r"\1 ", text)

    text = text.replace(URL_PERIOD, ".")
    return CleanReport(output=text, actions=tuple(actions))
