"""Reserved placeholder codepoints and the mask registry.

The pipeline never deletes punctuation: each character it decides is not a
sentence boundary is swapped for a private-use codepoint, and a final restore
pass swaps every placeholder back.  One codepoint is reserved per masked
punctuation class (decimal period, abbreviation period, in-quote terminal,
and so on), which keeps the restore table bijective per entry and makes
masked text readable in a debugger.

The whole block U+E000..U+E07F is reserved; input containing any codepoint
from it is rejected outright rather than re-encoded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

RESERVED_FIRST = 0xE000
RESERVED_LAST = 0xE07F

# Synthetic hard-boundary marker. Inserted by rules, consumed by the split
# stage, never part of the mask table (it masks nothing).
SPLIT_HINT = ""

ABBREV_PERIOD = ""
DECIMAL_PERIOD = ""
FILE_PERIOD = ""
NUMBER_PERIOD = ""
ELLIPSIS_PERIOD = ""
ELLIPSIS_CHAR = ""
LIST_PERIOD = ""
EXCLAMATION_BANG = ""
AMPM_PERIOD = ""
INITIAL_PERIOD = ""
ACRONYM_PERIOD = ""
URL_PERIOD = ""
URL_QMARK = ""
URL_BANG = ""
CITATION_PERIOD = ""

_SINGLES: dict[str, str] = {
    ABBREV_PERIOD: ".",
    DECIMAL_PERIOD: ".",
    FILE_PERIOD: ".",
    NUMBER_PERIOD: ".",
    ELLIPSIS_PERIOD: ".",
    ELLIPSIS_CHAR: "…",
    LIST_PERIOD: ".",
    EXCLAMATION_BANG: "!",
    AMPM_PERIOD: ".",
    INITIAL_PERIOD: ".",
    ACRONYM_PERIOD: ".",
    URL_PERIOD: ".",
    URL_QMARK: "?",
    URL_BANG: "!",
    CITATION_PERIOD: ".",
}

# Terminals maskable inside paired punctuation, across all shipped scripts.
PAIR_MASKABLE = ".!?…؟।॥。！？"

_PAIR_BLOCK_START = {"quote": 0xE020, "paren": 0xE040, "dash": 0xE060}

# PAIR_MASKS[context][original char] -> placeholder
PAIR_MASKS: dict[str, Mapping[str, str]] = {}
_pair_entries: dict[str, str] = {}
for _ctx, _start in _PAIR_BLOCK_START.items():
    _table = {}
    for _i, _ch in enumerate(PAIR_MASKABLE):
        _ph = chr(_start + _i)
        _table[_ch] = _ph
        _pair_entries[_ph] = _ch
    PAIR_MASKS[_ctx] = MappingProxyType(_table)

# Every placeholder that stands for a terminal masked inside a pair; the
# boundary-after-closing-quote rule keys off these.
PAIR_TERMINAL_CLASS = "".join(sorted(_pair_entries))


@dataclass(frozen=True)
class PlaceholderRegistry:
    """Bijective table from placeholder codepoint to the original it masks."""

    table: Mapping[str, str]

    def __post_init__(self) -> None:
        for ph, original in self.table.items():
            if not (len(ph) == 1 and RESERVED_FIRST <= ord(ph) <= RESERVED_LAST):
                raise ValueError(f"placeholder {ph!r} outside the reserved block")
            if not original:
                raise ValueError(f"placeholder {ph!r} has an empty original")

    def original(self, placeholder: str) -> str:
        return self.table[placeholder]

    def translation(self) -> dict[int, str]:
        mapping = {ord(ph): original for ph, original in self.table.items()}
        mapping[ord(SPLIT_HINT)] = ""
        return mapping


DEFAULT_REGISTRY = PlaceholderRegistry(MappingProxyType({**_SINGLES, **_pair_entries}))

_RESTORE_TRANSLATION = DEFAULT_REGISTRY.translation()

_RESERVED_RE = re.compile(f"[{chr(RESERVED_FIRST)}-{chr(RESERVED_LAST)}]")


def scan_reserved(text: str) -> bool:
    """True iff the text contains any codepoint from the reserved block."""
    return _RESERVED_RE.search(text) is not None


def restore_placeholders(text: str, registry: PlaceholderRegistry | None = None) -> str:
    """Swap every placeholder back to its registered original.

    The split hint restores to the empty string; everything else is a
    one-for-one character swap, so masking pipelines are lossless.
    """
    if registry is None or registry is DEFAULT_REGISTRY:
        return text.translate(_RESTORE_TRANSLATION)
    return text.translate(registry.translation())
