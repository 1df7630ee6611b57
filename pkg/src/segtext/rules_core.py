"""Rule engine plus the two universal rule groups, Common and Standard.

A rule is an ordered match/replace pattern.  Most replacements are plain
templates (group references and placeholder codepoints); a few rules that
must mask several characters inside one matched token (URLs, e-mail
addresses, dot runs) use a callable replacement instead.  Rules are applied
exactly once each, in rank order, over the whole text.

Patterns stay within a backreference-free subset (character classes,
alternation, bounded repetition, lookaround) so matching stays close to
linear in the input length.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterable, Sequence

from .config import ErrorKind, SegmenterError
from . import placeholders as ph


class GroupName(Enum):
    COMMON = "Common"
    STANDARD = "Standard"
    LIST_ITEM = "ListItem"
    ABBREVIATION = "Abbreviation"
    EXCLAMATION_WORDS = "ExclamationWords"
    BETWEEN_PUNCTUATION = "BetweenPunctuation"


@dataclass(frozen=True)
class Rule:
    """One match/replace step.  Compiled at profile-build time.

    ``gate`` lists cheap substrings: when none of them occurs in the text the
    pattern cannot match and the scan is skipped entirely.
    """

    id: str
    order: int
    pattern: re.Pattern[str]
    replacement: str | Callable[[re.Match[str]], str]
    gate: tuple[str, ...] = ()

    def apply(self, text: str) -> str:
        if self.gate and not any(g in text for g in self.gate):
            return text
        return self.pattern.sub(self.replacement, text)


@dataclass(frozen=True)
class RuleGroup:
    name: GroupName
    rules: tuple[Rule, ...] = field(default_factory=tuple)


def make_group(name: GroupName, rules: Iterable[Rule]) -> RuleGroup:
    ordered = tuple(sorted(rules, key=lambda r: r.order))
    ranks = [r.order for r in ordered]
    if len(set(ranks)) != len(ranks):
        raise ValueError(f"duplicate rule ranks in group {name.value}: {ranks}")
    return RuleGroup(name=name, rules=ordered)


def apply_group(text: str, group: RuleGroup) -> str:
    """Apply every rule of the group once, in rank order."""
    for rule in group.rules:
        text = rule.apply(text)
    return text


def rule(id: str, order: int, pattern: str, replacement, flags: int = 0, gate: tuple[str, ...] = ()) -> Rule:
    return Rule(
        id=id, order=order, pattern=re.compile(pattern, flags), replacement=replacement, gate=gate
    )


# ---------------------------------------------------------------------------
# Textual rule-table format: id TAB rank TAB pattern TAB replacement.
# Replacements support \uXXXX, \n, \t and \\ escapes plus \1-style group refs.

_ESCAPE_RE = re.compile(r"\\(u[0-9a-fA-F]{4}|n|t|\\)")


def _unescape(template: str) -> str:
    def sub(m: re.Match[str]) -> str:
        body = m.group(1)
        if body.startswith("u"):
            return chr(int(body[1:], 16))
        return {"n": "\n", "t": "\t", "\\": "\\"}[body]

    return _ESCAPE_RE.sub(sub, template)


def parse_rule_table(lines: Iterable[str], source: str = "<rules>") -> list[Rule]:
    """Parse the one-rule-per-line TSV format used by tests and extensions."""
    rules: list[Rule] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise SegmenterError(
                ErrorKind.MALFORMED_FIXTURE,
                f"{source}:{lineno}: expected 4 tab-separated fields, got {len(parts)}",
            )
        rule_id, rank_s, pattern_s, replacement_s = parts
        try:
            rank = int(rank_s)
        except ValueError:
            raise SegmenterError(
                ErrorKind.MALFORMED_FIXTURE, f"{source}:{lineno}: rank is not an integer"
            ) from None
        try:
            pattern = re.compile(pattern_s)
        except re.error as exc:
            raise SegmenterError(
                ErrorKind.MALFORMED_FIXTURE, f"{source}:{lineno}: bad pattern: {exc}"
            ) from None
        rules.append(Rule(id=rule_id, order=rank, pattern=pattern, replacement=_unescape(replacement_s)))
    seen: set[str] = set()
    for r in rules:
        if r.id in seen:
            raise SegmenterError(ErrorKind.MALFORMED_FIXTURE, f"{source}: duplicate rule id {r.id!r}")
        seen.add(r.id)
    return rules


def load_rule_table(path) -> list[Rule]:
    with open(path, encoding="utf-8") as fh:
        return parse_rule_table(fh, source=str(path))


# ---------------------------------------------------------------------------
# Common rules.  The number half runs early (before paired punctuation is
# masked); the rest runs late, after abbreviations and pairs have settled.

def _starter_alt(starters: Sequence[str]) -> str:
    return "|".join(re.escape(w) for w in sorted(starters, key=len, reverse=True))


def build_common_number_group(starters: Sequence[str]) -> RuleGroup:
    rules = [
        # Trailing citation marker: the digits attach to the sentence they
        # follow and the boundary moves after them.
        rule(
            "cite-marker",
            10,
            r"(?<=[a-z])\.(\d{1,3})(?=\s+[A-Z“\"‘'(])",
            ph.CITATION_PERIOD + r"\1" + ph.SPLIT_HINT,
        ),
        rule("decimal-period", 20, r"(?<=\d)\.(?=\d)", ph.DECIMAL_PERIOD),
        rule("period-before-digit", 30, r"\.(?=\d)", ph.NUMBER_PERIOD),
    ]
    return make_group(GroupName.COMMON, rules)


def build_common_post_group(starters: Sequence[str]) -> RuleGroup:
    alt = _starter_alt(starters)
    rules = [
        rule(
            "ampm-internal",
            10,
            r"\b([ap])\.(?=m\.)|\b([AP])\.(?=M\.)",
            lambda m: (m.group(1) or m.group(2)) + ph.AMPM_PERIOD,
            gate=(".m.", ".M."),
        ),
        # After upper-case AM/PM a capitalized word starts a new sentence;
        # after lower-case am/pm only a known sentence starter does.
        rule(
            "ampm-upper-mask-before-lower",
            30,
            rf"(?<=[AP]{ph.AMPM_PERIOD}M)\.(?=\s+[a-z0-9])",
            ph.AMPM_PERIOD,
            gate=(ph.AMPM_PERIOD,),
        ),
    ]
    if alt:
        rules.append(
            rule(
                "ampm-lower-final",
                40,
                rf"(?<=[ap]{ph.AMPM_PERIOD}m)\.(?!\s+(?:{alt})\b)",
                ph.AMPM_PERIOD,
                gate=(ph.AMPM_PERIOD,),
            )
        )
    else:
        rules.append(
            rule(
                "ampm-lower-final",
                40,
                rf"(?<=[ap]{ph.AMPM_PERIOD}m)\.",
                ph.AMPM_PERIOD,
                gate=(ph.AMPM_PERIOD,),
            )
        )
    rules.append(
        # Terminal masked inside a pair, then the closing mark, then a fresh
        # capitalized/numeric start: the boundary sits after the closer.
        rule(
            "boundary-after-closed-pair",
            50,
            rf"([{ph.PAIR_TERMINAL_CLASS}][\"'”’»›)\]）」』])(?=\s+[A-Z0-9])",
            r"\1" + ph.SPLIT_HINT,
        )
    )
    return make_group(GroupName.COMMON, rules)


# ---------------------------------------------------------------------------
# Standard rules: URLs/e-mail, file extensions, ellipsis forms.

_FILE_EXTENSIONS = (
    "txt|pdf|docx|doc|html|htm|csv|xml|json|md|xlsx|xls|pptx|ppt|zip|gz|tar|"
    "py|rb|js|ts|yml|yaml|ini|cfg|log|com|org|net|edu|gov|io"
)

_URL_TOKEN_RE = re.compile(r"(?:(?:https?|ftp)://|www\.)[^\s<>\"»”]+")
_EMAIL_TOKEN_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9._%+'-]*@[A-Za-z0-9.-]+\.[A-Za-z]{2,}\.?")

_TOKEN_MASK = {".": ph.URL_PERIOD, "?": ph.URL_QMARK, "!": ph.URL_BANG}


def _mask_token(m: re.Match[str]) -> str:
    """Mask terminals inside a URL/e-mail token, keeping a trailing one.

    The trailing period of "see example.com." is the sentence boundary, not
    part of the address.
    """
    token = m.group(0)
    body, tail = (token[:-1], token[-1]) if token[-1] in ".!?" else (token, "")
    return "".join(_TOKEN_MASK.get(c, c) for c in body) + tail


def build_standard_group(extra_rules: Sequence[Rule] = ()) -> RuleGroup:
    ep = ph.ELLIPSIS_PERIOD
    rules = [
        rule("url", 10, _URL_TOKEN_RE.pattern, _mask_token, gate=("://", "www.")),
        rule("email", 20, _EMAIL_TOKEN_RE.pattern, _mask_token, gate=("@",)),
        rule(
            "file-extension",
            30,
            rf"(?<=[A-Za-z0-9_-])\.(?=(?:{_FILE_EXTENSIONS})\b)",
            ph.FILE_PERIOD,
            gate=(".",),
        ),
        # Spaced dot runs, one scan.  A word-attached period followed by a
        # spaced ellipsis and a fresh sentence keeps the attached period as
        # the boundary (the spaced dots open the next sentence); a
        # free-standing spaced four-dot run is ellipsis plus terminal; a
        # free-standing spaced three-dot run is pure ellipsis.
        rule(
            "ellipsis-spaced",
            40,
            r"(?P<att>(?<=\w)\.(?: \.){3}(?=\s+[A-Z]))"
            r"|(?<!\S)(?P<sp4>\. \. \. \.(?=\s|$))"
            r"|(?<!\S)(?P<sp3>\. \. \.(?=\s|$))",
            lambda m: {
                "att": f".{ph.SPLIT_HINT} {ep} {ep} {ep}",
                "sp4": f"{ep} {ep} {ep} .",
                "sp3": f"{ep} {ep} {ep}",
            }[m.lastgroup],
            gate=(". .",),
        ),
        # Four or more consecutive dots: all but the last are ellipsis.
        rule("ellipsis-many", 70, r"\.\.\.+(?=\.)", lambda m: ep * len(m.group(0)), gate=("....",)),
        # Exactly three dots kept as a boundary before a fresh sentence.
        rule("ellipsis-three-boundary", 80, r"(?<!\.)\.\.(?=\.\s+[A-Z])", ep + ep, gate=("...",)),
        rule("ellipsis-three", 90, r"(?<!\.)\.\.\.(?!\.)", ep * 3, gate=("...",)),
        rule(
            "ellipsis-char-boundary",
            100,
            r"…(?=\s+[A-Z])",
            ph.ELLIPSIS_CHAR + ph.SPLIT_HINT,
            gate=("…",),
        ),
        rule("ellipsis-char", 110, r"…", ph.ELLIPSIS_CHAR, gate=("…",)),
    ]
    rules.extend(extra_rules)
    return make_group(GroupName.STANDARD, rules)
