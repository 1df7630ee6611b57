"""Context-sensitive rule groups: list items, abbreviations, exclamation
words, and punctuation pairs.

These four groups need more context than a single match/replace template can
express (sequence evidence for lists, class lookups for abbreviations), so
they are implemented as functions over immutable profile data.  All of them
only ever mask characters or insert split hints; none deletes text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from . import placeholders as ph

# ---------------------------------------------------------------------------
# Abbreviations


@dataclass(frozen=True)
class AbbreviationSet:
    """Abbreviation lists, stored without their trailing period.

    prepositive entries (Mr, Dr, St) never end a sentence before a following
    word; number entries (No, Art) are not boundaries when a digit follows;
    general entries end a sentence only when a known sentence starter
    follows.  Lookups are case-sensitive first, case-folded second.
    """

    prepositive: frozenset[str] = frozenset()
    number: frozenset[str] = frozenset()
    general: frozenset[str] = frozenset()
    sentence_starters: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        for name in ("prepositive", "number", "general"):
            for entry in getattr(self, name):
                if entry.endswith("."):
                    raise ValueError(f"{name} entry {entry!r} must omit the trailing period")
        object.__setattr__(self, "_prepositive_cf", frozenset(w.casefold() for w in self.prepositive))
        object.__setattr__(self, "_number_cf", frozenset(w.casefold() for w in self.number))
        object.__setattr__(self, "_general_cf", frozenset(w.casefold() for w in self.general))
        object.__setattr__(self, "_starter_follow", _compile_starter_follow(self.sentence_starters))

    def classify(self, token: str) -> str | None:
        if token in self.prepositive:
            return "prepositive"
        if token in self.number:
            return "number"
        if token in self.general:
            return "general"
        folded = token.casefold()
        if folded in self._prepositive_cf:  # type: ignore[attr-defined]
            return "prepositive"
        if folded in self._number_cf:  # type: ignore[attr-defined]
            return "number"
        if folded in self._general_cf:  # type: ignore[attr-defined]
            return "general"
        return None


# One scan handles all three shapes, tried in this order at each position:
# dotted single-letter runs (U.S.A., e.g.; am/pm is left for the time-of-day
# rules), a single capital initial before a capitalized word (Jonas E.
# Smith), and a word token ending in a period, possibly dotted internally
# (Jr. / N°. / उ.प्र.).
_ABBREV_SCAN_RE = re.compile(
    r"(?P<acr>\b(?:[^\W\d_]\.){2,})"
    r"|(?<![^\s“\"‘'(\[«])(?P<ini>[A-Z])\.(?=\s+[A-Z])"
    r"|(?<!\w)(?P<tok>[^\W\d_][^\s.]*(?:\.[^\s.]+)*)\.(?=[\s)\]»”’'\",;:!?]|$)"
)
_AMPM_TOKENS = {"a.m.", "p.m."}
_DIGIT_AFTER_RE = re.compile(r"\s?\d")


def _compile_starter_follow(starters: Iterable[str]) -> re.Pattern[str] | None:
    words = sorted(starters, key=len, reverse=True)
    if not words:
        return None
    alt = "|".join(re.escape(w) for w in words)
    return re.compile(rf"\s+(?:{alt})\b")


def replace_abbreviations(text: str, abbr: AbbreviationSet) -> str:
    """Mask abbreviation periods that do not end a sentence."""
    if "." not in text:
        return text
    starter_follow = abbr._starter_follow  # type: ignore[attr-defined]

    def follows_starter(pos: int, s: str) -> bool:
        return starter_follow is not None and starter_follow.match(s, pos) is not None

    def handle(m: re.Match[str]) -> str:
        kind = m.lastgroup
        if kind == "acr":
            token = m.group(0)
            if token.casefold() in _AMPM_TOKENS:
                return token
            inner = token[:-1].replace(".", ph.ACRONYM_PERIOD)
            if follows_starter(m.end(), m.string):
                return inner + "."
            return inner + ph.ACRONYM_PERIOD
        if kind == "ini":
            if follows_starter(m.end(), m.string):
                return m.group(0)
            return m.group("ini") + ph.INITIAL_PERIOD
        token = m.group("tok")
        cls = abbr.classify(token)
        if cls is None:
            return m.group(0)
        if cls == "number":
            if _DIGIT_AFTER_RE.match(m.string, m.end()):
                return token + ph.ABBREV_PERIOD
            return m.group(0)
        if cls == "general" and follows_starter(m.end(), m.string):
            return m.group(0)
        return token + ph.ABBREV_PERIOD

    return _ABBREV_SCAN_RE.sub(handle, text)


# ---------------------------------------------------------------------------
# Exclamation words


@dataclass(frozen=True)
class ExclamationWordSet:
    words: frozenset[str] = frozenset()

    def __post_init__(self) -> None:
        for word in self.words:
            if "!" not in word:
                raise ValueError(f"exclamation word {word!r} contains no '!'")
        pattern = None
        if self.words:
            alt = "|".join(re.escape(w) for w in sorted(self.words, key=len, reverse=True))
            pattern = re.compile(rf"(?<![\w!])(?:{alt})(?![\w!])")
        object.__setattr__(self, "_pattern", pattern)


def replace_exclamation_words(text: str, words: ExclamationWordSet) -> str:
    """Mask the bang inside listed words (Yahoo!, Yum!) so it never splits."""
    pattern = words._pattern  # type: ignore[attr-defined]
    if pattern is None or "!" not in text:
        return text
    return pattern.sub(lambda m: m.group(0).replace("!", ph.EXCLAMATION_BANG), text)


# ---------------------------------------------------------------------------
# Paired punctuation


@dataclass(frozen=True)
class PairSpec:
    """One open/close pair plus the terminal classes masked inside it."""

    open: str
    close: str
    context: str = "quote"  # quote | paren | dash
    mask_chars: str = ph.PAIR_MASKABLE

    def __post_init__(self) -> None:
        if not self.open or not self.close:
            raise ValueError("pair delimiters must be non-empty")
        if self.context not in ph.PAIR_MASKS:
            raise ValueError(f"unknown pair context {self.context!r}")
        object.__setattr__(self, "_pattern", _pair_pattern(self))
        table = {c: p for c, p in ph.PAIR_MASKS[self.context].items() if c in self.mask_chars}
        object.__setattr__(self, "_table", table)


def _pair_pattern(spec: PairSpec) -> re.Pattern[str]:
    o, c = re.escape(spec.open), re.escape(spec.close)
    if spec.open == "'" and spec.close == "'":
        # Straight single quotes double as apostrophes: the opener must not
        # ride on a word, and in-word apostrophes are allowed inside.
        return re.compile(
            r"(?:^|(?<=[\s,:;—–(\[{“‘\"]))"
            r"'((?:[^'\n]|'(?=[a-z]))*)'(?!')"
        )
    if spec.open == "‘" and spec.close == "’":
        return re.compile(r"‘((?:[^‘’\n]|’(?=[a-z]))*)’")
    if len(spec.open) > 1 or len(spec.close) > 1:
        interior = "+?" if spec.context == "dash" else "*?"
        return re.compile(rf"{o}((?:(?!{o}|{c})[^\n]){interior}){c}")
    if spec.context == "dash":
        return re.compile(rf"{o}([^{o}\n]+){c}")
    if spec.open == spec.close:
        return re.compile(rf"{o}([^{o}\n]*){c}")
    return re.compile(rf"{o}([^{o}{c}\n]*){c}")


def mask_between_punctuation(text: str, pairs: Sequence[PairSpec]) -> str:
    """Mask terminals lying strictly between balanced pair delimiters.

    Matching is shortest-first and non-nesting; unbalanced delimiters are
    left alone.
    """
    for spec in pairs:
        table: Mapping[str, str] = spec._table  # type: ignore[attr-defined]
        pattern: re.Pattern[str] = spec._pattern  # type: ignore[attr-defined]

        def mask(m: re.Match[str]) -> str:
            inner = m.group(1)
            if not any(c in table for c in inner):
                return m.group(0)
            masked = "".join(table.get(c, c) for c in inner)
            return spec.open + masked + spec.close

        text = pattern.sub(mask, text)
    return text


# ---------------------------------------------------------------------------
# List items

_BULLET_GLYPHS = "•◦⁃‣▪●"

# One scan for every marker shape: "1.)", "1.", "1)", "a.", "a)", bullets.
# Only the digits/letter/glyph are consumed; the marker punctuation sits in a
# lookahead so its position is simply the match end.
_LIST_SCAN_RE = re.compile(
    rf"(?<![^\s{_BULLET_GLYPHS}])(?:"
    rf"(?P<ndp>\d{{1,3}})(?=\.\)(?:\s|$))"
    rf"|(?P<nd>\d{{1,3}})(?=\.\s)"
    rf"|(?P<np>\d{{1,3}})(?=\)(?:\s|$))"
    rf"|(?P<ad>[a-z])(?=\.\s)"
    rf"|(?P<ap>[a-z])(?=\)(?:\s|$))"
    rf"|(?P<bu>[{_BULLET_GLYPHS}])(?=\s?\S)"
    rf")"
)
_LINE_MARKER_RE = re.compile(r"(?:^|(?<=\n))\s*([-*])(?=\s)")

_MASKED_FORMATS = {"ndp", "nd", "ad"}  # formats whose marker period is masked


def _chain_qualified(values: list[int]) -> list[bool]:
    """A marker is list evidence only if its successor or predecessor
    candidate continues the sequence."""
    n = len(values)
    return [
        (i + 1 < n and values[i + 1] == values[i] + 1)
        or (i > 0 and values[i - 1] == values[i] - 1)
        for i in range(n)
    ]


def replace_list_items(text: str) -> str:
    """Mask list-marker periods and force a boundary between items.

    Numeric markers need sequence evidence ("1." is a list head only when
    "2." follows); isolated numbers are never treated as markers.
    """
    if not text:
        return text
    masks: dict[int, str] = {}  # position of a single char -> replacement
    hints: set[int] = set()  # insert a split hint before this position

    def note_hint(pos: int) -> None:
        if pos <= 0 or text[pos - 1] == ph.SPLIT_HINT:
            return
        hints.add(pos)

    candidates: dict[str, list[re.Match[str]]] = {}
    for m in _LIST_SCAN_RE.finditer(text):
        candidates.setdefault(m.lastgroup, []).append(m)  # type: ignore[arg-type]

    # Bullets: two or more of the same glyph separate items on their own.
    by_glyph: dict[str, list[int]] = {}
    for m in candidates.get("bu", ()):
        by_glyph.setdefault(m.group("bu"), []).append(m.start())
    if "\n" in text or text.lstrip()[:1] in ("-", "*"):
        for m in _LINE_MARKER_RE.finditer(text):
            by_glyph.setdefault(m.group(1), []).append(m.start(1))
    for positions in by_glyph.values():
        if len(positions) < 2:
            continue
        for pos in positions[1:]:
            note_hint(pos)

    def bullet_before(pos: int) -> bool:
        head = text[max(0, pos - 2) : pos]
        return any(g in head for g in _BULLET_GLYPHS)

    for fmt in ("ndp", "nd", "np", "ad", "ap"):
        matches = candidates.get(fmt, [])
        if not matches:
            continue
        if fmt in ("ad", "ap"):
            values = [ord(m.group(fmt)) for m in matches]
        else:
            values = [int(m.group(fmt)) for m in matches]
        qualified = _chain_qualified(values)
        for i, m in enumerate(matches):
            if not qualified[i]:
                continue
            if fmt in _MASKED_FORMATS:
                masks[m.end()] = ph.LIST_PERIOD
            chain_start = not (i > 0 and qualified[i - 1] and values[i] == values[i - 1] + 1)
            if not chain_start and not bullet_before(m.start()):
                note_hint(m.start())

    if not masks and not hints:
        return text
    out: list[str] = []
    prev = 0
    for pos in sorted(set(masks) | hints):
        out.append(text[prev:pos])
        prev = pos
        if pos in hints:
            out.append(ph.SPLIT_HINT)
        if pos in masks:
            out.append(masks[pos])
            prev = pos + 1
    out.append(text[prev:])
    return "".join(out)
