"""Public configuration and error vocabulary.

Option combinations are validated up front so the pipeline never has to
second-guess its inputs.  Configs are immutable value objects and safe to
share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class DocType(Enum):
    PLAIN = "plain"
    PDF = "pdf"


class ErrorKind(Enum):
    UNKNOWN_LANGUAGE = "UnknownLanguage"
    INCOMPATIBLE_OPTIONS = "IncompatibleOptions"
    RESERVED_CODEPOINT_IN_INPUT = "ReservedCodepointInInput"
    MALFORMED_FIXTURE = "MalformedFixture"


class SegmenterError(Exception):
    """Single error type for every public operation that can fail."""

    def __init__(self, kind: ErrorKind, detail: str):
        super().__init__(f"{kind.value}: {detail}")
        self.kind = kind
        self.detail = detail


_LANGUAGE_CODE_RE = re.compile(r"^[a-z]{2}$")


@dataclass(frozen=True)
class SegmenterConfig:
    """Validated segmenter options.

    ``clean`` rewrites the input text before segmentation, so it can never be
    combined with ``char_span`` (spans index into the unaltered original).
    """

    language: str
    clean: bool = False
    char_span: bool = False
    doc_type: DocType = DocType.PLAIN

    def __post_init__(self) -> None:
        if self.clean and self.char_span:
            raise SegmenterError(
                ErrorKind.INCOMPATIBLE_OPTIONS,
                "clean rewrites the input, so char spans into the original "
                "text cannot be produced; disable one of clean/char_span",
            )


def make_config(
    language: str,
    clean: bool = False,
    char_span: bool = False,
    doc_type: str = "plain",
) -> SegmenterConfig:
    """Build a validated config.

    Language codes are case-normalized to lowercase before the registry
    lookup.  Unrecognized ``doc_type`` strings are an error rather than a
    silent fallback to plain.
    """
    from . import languages  # deferred: languages imports config types

    code = language.strip().lower()
    if not _LANGUAGE_CODE_RE.match(code):
        raise SegmenterError(
            ErrorKind.UNKNOWN_LANGUAGE,
            f"not a two-letter ISO 639-1 code: {language!r}",
        )
    try:
        kind = DocType(doc_type.strip().lower())
    except ValueError:
        raise SegmenterError(
            ErrorKind.INCOMPATIBLE_OPTIONS,
            f"doc_type must be 'plain' or 'pdf', got {doc_type!r}",
        ) from None
    languages.lookup(code)  # raises UNKNOWN_LANGUAGE for unregistered codes
    return SegmenterConfig(language=code, clean=clean, char_span=char_span, doc_type=kind)
