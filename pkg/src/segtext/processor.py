"""The segmentation pipeline: mask, split, restore, and span mapping.

Masking runs the rule groups in a fixed order (list detection first, since it
needs the raw line structure; paired punctuation before the late Common rules
so quote interiors are protected before boundary decisions).  The split stage
then only has to cut after unmasked terminals and at split hints, and the
restore stage swaps every placeholder back, so output sentences are exact
substrings of the input.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .config import ErrorKind, SegmenterConfig, SegmenterError, make_config
from .languages import LanguageProfile, lookup
from .placeholders import SPLIT_HINT, restore_placeholders, scan_reserved
from .rules_core import apply_group
from .rules_special import (
    mask_between_punctuation,
    replace_abbreviations,
    replace_exclamation_words,
    replace_list_items,
)

# Stage order is fixed and identical for every profile.
PIPELINE_STAGES = (
    "list-items",
    "abbreviations",
    "common-number",
    "between-punctuation",
    "exclamation-words",
    "common-remaining",
    "standard",
    "split",
    "restore",
)

_HARD_BREAK_RE = re.compile(r"[\r\n\x0b\x0c  ]+")


@dataclass(frozen=True)
class TextSpan:
    """A sentence plus its character offsets into the original text.

    Offsets are Unicode scalar values, 0-based, end-exclusive, and
    ``original[start:end] == sentence`` holds exactly.
    """

    sentence: str
    start: int
    end: int

    def __post_init__(self) -> None:
        if self.end <= self.start:
            raise ValueError(f"empty span [{self.start}, {self.end})")


def mask_pipeline(text: str, profile: LanguageProfile) -> str:
    """Run the masking stages; the result differs from the input only by
    placeholder substitutions and inserted split hints."""
    t = replace_list_items(text)
    t = replace_abbreviations(t, profile.abbreviations)
    t = apply_group(t, profile.common_number)
    t = mask_between_punctuation(t, profile.pairs)
    t = replace_exclamation_words(t, profile.exclamations)
    t = apply_group(t, profile.common_post)
    t = apply_group(t, profile.standard)
    return t


def split_on_boundaries(masked: str, profile: LanguageProfile) -> list[str]:
    """Split masked text after unmasked terminals, at split hints, and at
    hard line breaks.  Terminals stay with their sentence."""
    marked = profile.boundary_re.sub("\\g<0>" + SPLIT_HINT, masked)
    marked = _HARD_BREAK_RE.sub(SPLIT_HINT, marked)
    return [piece for piece in (p.strip() for p in marked.split(SPLIT_HINT)) if piece]


def segment(config: SegmenterConfig, text: str) -> list[str]:
    """Segment text into trimmed sentences."""
    if scan_reserved(text):
        raise SegmenterError(
            ErrorKind.RESERVED_CODEPOINT_IN_INPUT,
            "input contains codepoints from the reserved block U+E000..U+E07F",
        )
    profile = lookup(config.language)
    if config.clean:
        from .cleaner import clean

        text = clean(text, config.doc_type).output
    masked = mask_pipeline(text, profile)
    pieces = split_on_boundaries(masked, profile)
    sentences = [restore_placeholders(piece).strip() for piece in pieces]
    return [s for s in sentences if s]


def map_spans(original: str, sentences: list[str]) -> list[TextSpan]:
    """Locate each sentence in the original, left to right.

    Sentences produced by :func:`segment` are exact substrings in order, so
    a greedy scan always succeeds; failure indicates a pipeline defect.
    """
    spans: list[TextSpan] = []
    cursor = 0
    for sentence in sentences:
        index = original.find(sentence, cursor)
        if index < 0:
            raise RuntimeError(
                f"sentence not found in original text at or after offset {cursor}: {sentence!r}"
            )
        end = index + len(sentence)
        spans.append(TextSpan(sentence=sentence, start=index, end=end))
        cursor = end
    return spans


def segment_spans(config: SegmenterConfig, text: str) -> list[TextSpan]:
    """Segment and map every sentence back to its character span."""
    if not config.char_span:
        raise SegmenterError(
            ErrorKind.INCOMPATIBLE_OPTIONS, "segment_spans requires char_span=True"
        )
    return map_spans(text, segment(config, text))


class Segmenter:
    """Public entry point: bind a language and options once, then segment.

    A constructed segmenter is immutable and safe to share across threads.
    """

    def __init__(
        self,
        language: str = "en",
        clean: bool = False,
        char_span: bool = False,
        doc_type: str = "plain",
    ):
        self.config = make_config(language, clean=clean, char_span=char_span, doc_type=doc_type)

    def segment(self, text: str) -> list[str] | list[TextSpan]:
        if self.config.char_span:
            return segment_spans(self.config, text)
        return segment(self.config, text)
